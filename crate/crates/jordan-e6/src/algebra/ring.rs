use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::AlgebraError;

/// The composition rings the library works over.
///
/// Real rings have real coefficients; the `*C` variants are their
/// complexifications by an outer unit `i` commuting with the internal units.
/// Internal units are `1, e₁, e₂, e₃` truncated to the internal dimension;
/// for the split rings they are `1, 𝕚′` and `1, 𝕚′, 𝕛, 𝕚′𝕛`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingTag {
    R,
    C,
    Csplit,
    H,
    Hsplit,
    RC,
    CC,
    HC,
}

/// Sign table for products of internal units: `u_a·u_b = SIGN[a][b]·u_{a⊕b}`.
type SignTable = [[i8; 4]; 4];

const QUATERNION: SignTable = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]];
const SPLIT_QUATERNION: SignTable = [[1, 1, 1, 1], [1, 1, 1, 1], [1, -1, -1, 1], [1, -1, -1, 1]];

impl RingTag {
    pub const ALL: [RingTag; 8] = [
        RingTag::R,
        RingTag::C,
        RingTag::Csplit,
        RingTag::H,
        RingTag::Hsplit,
        RingTag::RC,
        RingTag::CC,
        RingTag::HC,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::R => "R",
            RingTag::C => "C",
            RingTag::Csplit => "Csplit",
            RingTag::H => "H",
            RingTag::Hsplit => "Hsplit",
            RingTag::RC => "RC",
            RingTag::CC => "CC",
            RingTag::HC => "HC",
        }
    }

    /// Number of internal units (dimension over the outer field).
    pub fn internal_dim(self) -> usize {
        match self {
            RingTag::R | RingTag::RC => 1,
            RingTag::C | RingTag::Csplit | RingTag::CC => 2,
            RingTag::H | RingTag::Hsplit | RingTag::HC => 4,
        }
    }

    /// Dimension over ℝ.
    pub fn real_dim(self) -> usize {
        self.internal_dim() * if self.is_complexified() { 2 } else { 1 }
    }

    pub fn is_complexified(self) -> bool {
        matches!(self, RingTag::RC | RingTag::CC | RingTag::HC)
    }

    pub fn is_split(self) -> bool {
        matches!(self, RingTag::Csplit | RingTag::Hsplit)
    }

    pub fn has_internal_unit(self) -> bool {
        self.internal_dim() > 1
    }

    pub fn is_commutative(self) -> bool {
        self.internal_dim() <= 2
    }

    /// Whether γ (conjugating the ℂ-part) is defined.
    pub fn has_gamma(self) -> bool {
        matches!(self, RingTag::C | RingTag::CC | RingTag::H | RingTag::HC)
    }

    /// `R`, `C`, `H` for the complexified rings; identity otherwise.
    pub fn real_form(self) -> RingTag {
        match self {
            RingTag::RC => RingTag::R,
            RingTag::CC => RingTag::C,
            RingTag::HC => RingTag::H,
            t => t,
        }
    }

    /// Complexification of a compact real ring.
    pub fn complexified(self) -> Option<RingTag> {
        match self {
            RingTag::R | RingTag::RC => Some(RingTag::RC),
            RingTag::C | RingTag::CC => Some(RingTag::CC),
            RingTag::H | RingTag::HC => Some(RingTag::HC),
            _ => None,
        }
    }

    /// Split real form obtained from the τγ-fixed part.
    pub fn split_form(self) -> Option<RingTag> {
        match self {
            RingTag::CC => Some(RingTag::Csplit),
            RingTag::HC => Some(RingTag::Hsplit),
            _ => None,
        }
    }

    /// `(sign, index)` with `u_a·u_b = sign·u_index`.
    pub fn unit_product(self, a: usize, b: usize) -> (i8, usize) {
        let table = if self.is_split() { &SPLIT_QUATERNION } else { &QUATERNION };
        (table[a][b], a ^ b)
    }

    /// Norm `u·ū` of the internal unit `u_a` (±1).
    pub fn unit_norm(self, a: usize) -> i8 {
        if a == 0 {
            1
        } else {
            -self.unit_product(a, a).0
        }
    }

    /// Sign of γ on the internal unit `u_a`: γ negates `e₁` and `e₃`.
    pub fn gamma_sign(self, a: usize) -> i8 {
        if a % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// Name of the internal unit `u_a`.
    pub fn unit_name(self, a: usize) -> &'static str {
        match (self.is_split(), a) {
            (_, 0) => "1",
            (false, 1) => "e1",
            (false, 2) => "e2",
            (false, 3) => "e3",
            (true, 1) => "i'",
            (true, 2) => "j",
            (true, _) => "i'j",
            _ => "?",
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RingTag {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RingTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| AlgebraError::Parse(format!("unknown ring tag {s:?}")))
    }
}
