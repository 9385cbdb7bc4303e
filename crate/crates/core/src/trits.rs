//! Fixed-length base-k digit strings with Lee and Hamming metrics.
//!
//! Digit 0 is the rightmost character of the written form, so `"0010"` has a
//! `1` at position 1. All range arithmetic uses this convention.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Digits stored least-significant first.
pub(crate) type Digits = SmallVec<[u8; 16]>;

/// Largest radix whose digits print as a single decimal character.
pub const MAX_RADIX: u8 = 10;

/// A string of `len` digits, each in `[0, radix)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TritString {
    radix: u8,
    digits: Digits,
}

impl TritString {
    /// Builds a string from digits given least-significant (position 0) first.
    pub fn from_digits(radix: u8, digits: &[u8]) -> Result<Self> {
        check_radix(radix)?;
        if digits.is_empty() {
            return Err(Error::Dimension("digit string must be non-empty".into()));
        }
        if let Some(&bad) = digits.iter().find(|&&d| d >= radix) {
            return Err(Error::Parse(format!("digit {bad} out of range for radix {radix}")));
        }
        Ok(Self { radix, digits: digits.iter().copied().collect() })
    }

    /// The all-zero string of the given length.
    pub fn zeros(radix: u8, len: usize) -> Result<Self> {
        Self::from_digits(radix, &vec![0; len])
    }

    /// A string with every digit equal to `digit`.
    pub fn repeat(radix: u8, digit: u8, len: usize) -> Result<Self> {
        Self::from_digits(radix, &vec![digit; len])
    }

    /// Parses the written form (most significant digit first).
    pub fn parse(radix: u8, text: &str) -> Result<Self> {
        check_radix(radix)?;
        let mut digits = Digits::new();
        for ch in text.chars().rev() {
            let value = ch
                .to_digit(10)
                .filter(|&d| d < u32::from(radix))
                .ok_or_else(|| Error::Parse(format!("invalid digit {ch:?} for radix {radix} in {text:?}")))?;
            digits.push(value as u8);
        }
        if digits.is_empty() {
            return Err(Error::Parse("empty digit string".into()));
        }
        Ok(Self { radix, digits })
    }

    /// Decodes `len` base-`radix` digits of `index`, position 0 least significant.
    pub fn from_index(radix: u8, len: usize, mut index: u64) -> Result<Self> {
        check_radix(radix)?;
        if len == 0 {
            return Err(Error::Dimension("digit string must be non-empty".into()));
        }
        let mut digits = Digits::with_capacity(len);
        for _ in 0..len {
            digits.push((index % u64::from(radix)) as u8);
            index /= u64::from(radix);
        }
        if index != 0 {
            return Err(Error::Codec(format!("index out of range for {len} digits of radix {radix}")));
        }
        Ok(Self { radix, digits })
    }

    pub(crate) fn from_raw(radix: u8, digits: Digits) -> Self {
        debug_assert!(!digits.is_empty() && digits.iter().all(|&d| d < radix));
        Self { radix, digits }
    }

    /// Base-`radix` value with position 0 least significant.
    pub fn index(&self) -> u64 {
        self.digits.iter().rev().fold(0u64, |acc, &d| acc * u64::from(self.radix) + u64::from(d))
    }

    pub fn radix(&self) -> u8 {
        self.radix
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at `position` (0 = rightmost).
    pub fn digit(&self, position: usize) -> u8 {
        self.digits[position]
    }

    /// Digits least-significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Copy with one digit replaced.
    pub fn with_digit(&self, position: usize, value: u8) -> Self {
        debug_assert!(value < self.radix);
        let mut digits = self.digits.clone();
        digits[position] = value;
        Self { radix: self.radix, digits }
    }

    /// Copy with `position` shifted by `delta` modulo the radix.
    pub fn shifted(&self, position: usize, delta: u8) -> Self {
        let value = (self.digits[position] + delta % self.radix) % self.radix;
        self.with_digit(position, value)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.radix != other.radix || self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "incompatible strings: radix {} len {} vs radix {} len {}",
                self.radix,
                self.len(),
                other.radix,
                other.len()
            )));
        }
        Ok(())
    }
}

fn check_radix(radix: u8) -> Result<()> {
    if (2..=MAX_RADIX).contains(&radix) {
        Ok(())
    } else {
        Err(Error::Dimension(format!("radix {radix} outside [2, {MAX_RADIX}]")))
    }
}

/// Circular distance of a single digit from zero.
fn digit_lee(d: u8, radix: u8) -> u32 {
    u32::from(d.min(radix - d))
}

/// Sum over digits of `min(d, k - d)`.
pub fn lee_weight(s: &TritString) -> u32 {
    s.digits.iter().map(|&d| digit_lee(d, s.radix)).sum()
}

/// Lee weight of the digit-wise difference `x - y (mod k)`.
pub fn lee_distance(x: &TritString, y: &TritString) -> Result<u32> {
    x.check_compatible(y)?;
    let k = x.radix;
    Ok(x.digits.iter().zip(&y.digits).map(|(&a, &b)| digit_lee((a + k - b) % k, k)).sum())
}

/// Number of differing positions, optionally restricted to the inclusive
/// position interval `[p, q]`.
pub fn hamming_distance(x: &TritString, y: &TritString, range: Option<(usize, usize)>) -> Result<u32> {
    x.check_compatible(y)?;
    let (p, q) = match range {
        None => (0, x.len() - 1),
        Some((p, q)) if p <= q && q < x.len() => (p, q),
        Some((p, q)) => {
            return Err(Error::Dimension(format!("invalid range [{p}, {q}] for length {}", x.len())));
        }
    };
    Ok((p..=q).filter(|&i| x.digits[i] != y.digits[i]).count() as u32)
}

impl fmt::Display for TritString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in self.digits.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TritString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radix == 3 {
            write!(f, "\"{self}\"")
        } else {
            write!(f, "\"{self}\"_{}", self.radix)
        }
    }
}

/// Parses as radix 3.
impl FromStr for TritString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(3, s)
    }
}

impl Serialize for TritString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Deserializes radix-3 strings only.
impl<'de> Deserialize<'de> for TritString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
