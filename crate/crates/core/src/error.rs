use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Length, radix or index-range mismatch between operands.
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// Vertex encoding outside the graph's vertex set.
    #[error("codec error: {0}")]
    Codec(String),
    /// Operation precondition violated (identical endpoints, bad parameters, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A path construction broke one of its own contracts.
    #[error("construction defect: {0}")]
    Construction(Box<Defect>),
    /// A requested computation exceeds its configured budget.
    #[error("resource budget exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn defect(message: impl Into<String>) -> Self {
        Self::Construction(Box::new(Defect { message: message.into(), case: None, paths: Vec::new() }))
    }
}

/// What went wrong in a construction, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Defect {
    pub message: String,
    /// `(fenlei, subcase)` of the pair being routed, when known.
    pub case: Option<(u8, u8)>,
    /// The offending paths as flat vertex strings.
    pub paths: Vec<Vec<String>>,
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)?;
        if let Some((fenlei, subcase)) = self.case {
            write!(f, " [case {fenlei}.{subcase}]")?;
        }
        for path in &self.paths {
            write!(f, "\n  {}", path.join(" -> "))?;
        }
        Ok(())
    }
}
