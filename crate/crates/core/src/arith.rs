//! Exact arbitrary-precision primitives: integer square root and perfect
//! square detection behind a base-10 last-two-digit filter.

use num_traits::ToPrimitive;

use crate::Natural;

/// The 22 residues mod 100 a perfect square can have, i.e. the two-digit
/// decimal endings 00, e1, e4, 25, o6 and e9, where e is an even digit and
/// o an odd digit. "Last two digits" of `n` means `n mod 100`, so single-digit
/// inputs are read with a leading zero.
pub const SQUARE_RESIDUES_MOD_100: [u8; 22] = [
    0, 1, 4, 9, 16, 21, 24, 25, 29, 36, 41, 44, 49, 56, 61, 64, 69, 76, 81, 84, 89, 96,
];

const fn residue_table() -> [bool; 100] {
    let mut table = [false; 100];
    let mut i = 0;
    while i < SQUARE_RESIDUES_MOD_100.len() {
        table[SQUARE_RESIDUES_MOD_100[i] as usize] = true;
        i += 1;
    }
    table
}

pub(crate) const SQUARE_RESIDUE_TABLE: [bool; 100] = residue_table();

/// Outcome of [`check_square`]: the filter verdict, plus the exact root when
/// the input really is a perfect square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareCheck {
    pub passes_filter: bool,
    /// `Some(r)` iff the checked input equals `r * r`.
    pub root: Option<Natural>,
}

/// Floor of the square root: the unique `r` with `r^2 <= n < (r + 1)^2`.
pub fn isqrt(n: &Natural) -> Natural {
    n.sqrt()
}

/// Necessary condition for squareness: do the last two decimal digits of `n`
/// form one of the 22 endings a perfect square can have?
///
/// The filter is sound (no square is ever rejected) but not sufficient:
/// 21 ends in an accepted pair yet is not a square.
pub fn square_filter(n: &Natural) -> bool {
    SQUARE_RESIDUE_TABLE[residue_mod_100(n) as usize]
}

pub(crate) fn residue_mod_100(n: &Natural) -> u32 {
    (n % 100u32).to_u32().expect("residue below 100")
}

/// Filter-then-confirm square test. Inputs rejected by [`square_filter`] are
/// classified as non-square without computing any square root.
pub fn check_square(n: &Natural) -> SquareCheck {
    if !square_filter(n) {
        return SquareCheck {
            passes_filter: false,
            root: None,
        };
    }
    let r = isqrt(n);
    let root = if &r * &r == *n { Some(r) } else { None };
    SquareCheck {
        passes_filter: true,
        root,
    }
}
