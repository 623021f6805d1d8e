use std::fmt;
use std::str::FromStr;

use repsnu::arith::{format_rational, parse_rational, Rational};
use repsnu::young::nonneg_integer;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

pub fn usage(flag: &str, e: impl fmt::Display) -> CliError {
    CliError::Usage(format!("--{flag}: {e}"))
}

pub fn parse_flag<T: FromStr>(flag: &str, text: &str) -> Result<T, CliError>
where
    T::Err: fmt::Display,
{
    text.parse().map_err(|e| usage(flag, e))
}

/// The parameter `v`: a rational number or the symbol `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nu {
    Symbolic,
    Value(Rational),
}

impl FromStr for Nu {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t == "T" || t == "v" {
            return Ok(Nu::Symbolic);
        }
        parse_rational(t).map(Nu::Value).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Nu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nu::Symbolic => write!(f, "T"),
            Nu::Value(q) => write!(f, "{}", format_rational(q)),
        }
    }
}

impl Nu {
    pub fn numeric(&self, command: &str) -> Result<Rational, CliError> {
        match self {
            Nu::Value(q) => Ok(q.clone()),
            Nu::Symbolic => Err(CliError::Usage(format!("--nu: `{command}` needs a numeric value, not the symbol T"))),
        }
    }

    pub fn integer(&self, command: &str) -> Result<u64, CliError> {
        let q = self.numeric(command)?;
        nonneg_integer(&q).ok_or_else(|| {
            CliError::Usage(format!(
                "--nu: `{command}` needs a nonnegative integer; at v = {} every class is trivial",
                format_rational(&q)
            ))
        })
    }
}

/// `KIND:index`, e.g. `P:2` or `M*:1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectSpec {
    pub kind: String,
    pub index: usize,
}

impl FromStr for ObjectSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, index) = s.split_once(':').ok_or_else(|| format!("'{s}' is not of the form KIND:index"))?;
        let index = index.trim().parse().map_err(|_| format!("'{index}' is not a class position"))?;
        Ok(ObjectSpec { kind: kind.trim().to_string(), index })
    }
}
