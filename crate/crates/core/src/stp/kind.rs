use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stp::WeightScheme;

/// Which side the Kronecker multipliers are attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `A ⊗ 𝟙ᵀ`: each entry is repeated in place.
    Left,
    /// `𝟙ᵀ ⊗ A`: the whole row or column is tiled.
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::InvalidArgument(format!("unknown side `{other}`"))),
        }
    }
}

/// Selects one of the dimension-keeping product variants.
///
/// The unweighted products use [`WeightScheme::Ones`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductKind {
    pub side: Side,
    pub scheme: WeightScheme,
}

impl ProductKind {
    pub const LEFT: ProductKind = ProductKind {
        side: Side::Left,
        scheme: WeightScheme::Ones,
    };
    pub const RIGHT: ProductKind = ProductKind {
        side: Side::Right,
        scheme: WeightScheme::Ones,
    };

    pub fn weighted(side: Side, scheme: WeightScheme) -> Self {
        Self { side, scheme }
    }

    pub fn is_weighted(&self) -> bool {
        self.scheme != WeightScheme::Ones
    }
}

impl Default for ProductKind {
    fn default() -> Self {
        Self::LEFT
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_weighted() {
            write!(f, "{}/{}", self.side.name(), self.scheme)
        } else {
            f.write_str(self.side.name())
        }
    }
}
