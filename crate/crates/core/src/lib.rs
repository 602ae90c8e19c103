//! Computational order theory behind cardinal-valued Krull dimension.
//!
//! * [`order`]: finite and symbolic chains, finite posets, order maps.
//! * [`lexgroup`]: lexicographic sums of copies of ℤ, isolated subgroups,
//!   rank and the valuation-spectrum chain.
//! * [`chains`]: chains of subsets, C-orders, separated sets and the
//!   chain ⇄ dense-order conversion through cuts of `S × ℚ`.
//! * [`spectra`]: the graph `E_P`, the completion `Â(P)` and the prime
//!   spectrum order of the associated Leavitt path algebra.
//! * [`cardinal`]: symbolic cardinal arithmetic, axiom modes and the ring
//!   realizability decision procedure.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cardinal;
pub mod chains;
pub mod lexgroup;
pub mod order;
pub mod spectra;

/// Exact rationals with normalized sign and lowest terms.
pub type Rational = num_rational::Ratio<i64>;

/// Three-valued truth for statements the axiom mode may leave open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriBool {
    True,
    False,
    Unknown,
}

impl TriBool {
    pub fn is_true(self) -> bool {
        self == TriBool::True
    }

    pub fn is_false(self) -> bool {
        self == TriBool::False
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TriBool::True => "true",
            TriBool::False => "false",
            TriBool::Unknown => "unknown",
        }
    }
}

impl core::ops::Not for TriBool {
    type Output = TriBool;

    fn not(self) -> TriBool {
        match self {
            TriBool::True => TriBool::False,
            TriBool::False => TriBool::True,
            TriBool::Unknown => TriBool::Unknown,
        }
    }
}

impl From<bool> for TriBool {
    fn from(b: bool) -> Self {
        if b {
            TriBool::True
        } else {
            TriBool::False
        }
    }
}
