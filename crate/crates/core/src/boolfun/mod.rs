//! Boolean functions given by explicit truth tables, the shape predicates
//! that characterize the clone inventory, duals, and (in the submodules)
//! composition-closure computation with circuit witnesses.
//!
//! Truth-table encoding is fixed once and for all: a function of arity `n`
//! is a bitstring of length `2^n` where the bit at index `i` is the value on
//! the assignment whose binary encoding, with `x1` as the most significant
//! bit, equals `i`. So `and` is `0001`, `or` is `0111`, `not` is `10`.
//! Parsing and printing both use this row order.

mod closure;
mod clones;

pub use closure::{synthesize_circuit, Circuit, ClosureFragment, ClosureLimits};
pub use clones::{
    clone_contains, clone_subset, identify_clone, CloneId, CLONE_INVENTORY,
};

use crate::error::{Error, Result};
use std::fmt;

/// A Boolean function as arity plus truth table.
///
/// Arity 0 encodes the constants: table `[true]` is ⊤ and `[false]` is ⊥.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolFun {
    arity: usize,
    table: Vec<bool>,
}

impl BoolFun {
    /// Builds a function, checking that the table has length `2^arity`.
    pub fn new(arity: usize, table: Vec<bool>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::Resource(format!(
                "operator arity {arity} exceeds the supported maximum of {MAX_ARITY}"
            )));
        }
        if table.len() != 1usize << arity {
            return Err(Error::Resource(format!(
                "truth table has {} entries, arity {} requires {}",
                table.len(),
                arity,
                1usize << arity
            )));
        }
        Ok(BoolFun { arity, table })
    }

    /// Parses a `'0'/'1'` string in the fixed row order.
    pub fn from_table_str(arity: usize, s: &str) -> Result<Self> {
        let mut table = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => table.push(false),
                '1' => table.push(true),
                _ => {
                    return Err(Error::Resource(format!(
                        "invalid truth table character {ch:?}, expected 0 or 1"
                    )))
                }
            }
        }
        BoolFun::new(arity, table)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    /// Truth table as a `'0'/'1'` string.
    pub fn table_str(&self) -> String {
        self.table.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Value on a full assignment, `args[0]` being `x1`.
    pub fn eval(&self, args: &[bool]) -> bool {
        debug_assert_eq!(args.len(), self.arity);
        let mut idx = 0usize;
        for &a in args {
            idx = (idx << 1) | usize::from(a);
        }
        self.table[idx]
    }

    /// Value of variable `xj` (1-based) in the row with index `idx`.
    fn var_in_row(&self, idx: usize, j: usize) -> bool {
        (idx >> (self.arity - j)) & 1 == 1
    }

    /// The dual `g(x1..xn) = ¬f(¬x1..¬xn)`; an involution.
    pub fn dual(&self) -> BoolFun {
        let n = self.table.len();
        let table = (0..n).map(|i| !self.table[n - 1 - i]).collect();
        BoolFun { arity: self.arity, table }
    }

    /// Same function with `extra` dummy variables appended.
    pub fn pad_to_arity(&self, k: usize) -> BoolFun {
        assert!(k >= self.arity);
        let shift = k - self.arity;
        let table = (0..1usize << k).map(|i| self.table[i >> shift]).collect();
        BoolFun { arity: k, table }
    }

    pub fn is_constant(&self) -> bool {
        self.table.iter().all(|&b| b == self.table[0])
    }

    /// Constant ⊤ (at any arity).
    pub fn is_const_true(&self) -> bool {
        self.table.iter().all(|&b| b)
    }

    /// Constant ⊥ (at any arity).
    pub fn is_const_false(&self) -> bool {
        self.table.iter().all(|&b| !b)
    }

    /// Table equals the projection onto some variable.
    pub fn is_projection(&self) -> bool {
        self.projection_index().is_some()
    }

    /// `Some(j)` (1-based) when the table equals the projection onto `xj`.
    pub fn projection_index(&self) -> Option<usize> {
        (1..=self.arity).find(|&j| (0..self.table.len()).all(|i| self.table[i] == self.var_in_row(i, j)))
    }

    /// Table equals `xj` or `¬xj` for some variable; constants excluded.
    pub fn is_literal_shape(&self) -> bool {
        self.literal_index().is_some()
    }

    /// `Some((j, negated))` when the table is the literal `xj` / `¬xj`.
    pub fn literal_index(&self) -> Option<(usize, bool)> {
        for j in 1..=self.arity {
            if (0..self.table.len()).all(|i| self.table[i] == self.var_in_row(i, j)) {
                return Some((j, false));
            }
            if (0..self.table.len()).all(|i| self.table[i] != self.var_in_row(i, j)) {
                return Some((j, true));
            }
        }
        None
    }

    /// `Some(vars)` when `f = ∧_{j∈vars} xj` with `vars` nonempty (1-based).
    pub fn conjunction_vars(&self) -> Option<Vec<usize>> {
        if self.arity == 0 || self.is_const_false() {
            return None;
        }
        // The candidate variable set is the AND of all 1-rows.
        let mut mask = (1usize << self.arity) - 1;
        for (i, &b) in self.table.iter().enumerate() {
            if b {
                mask &= i;
            }
        }
        if mask == 0 {
            return None; // would be the constant ⊤
        }
        for (i, &b) in self.table.iter().enumerate() {
            if b != (i & mask == mask) {
                return None;
            }
        }
        Some(
            (1..=self.arity)
                .filter(|&j| (mask >> (self.arity - j)) & 1 == 1)
                .collect(),
        )
    }

    /// `Some(vars)` when `f = ∨_{j∈vars} xj` with `vars` nonempty.
    pub fn disjunction_vars(&self) -> Option<Vec<usize>> {
        self.dual().conjunction_vars()
    }

    pub fn preserves_false(&self) -> bool {
        !self.table[0]
    }

    pub fn preserves_true(&self) -> bool {
        *self.table.last().unwrap()
    }

    pub fn is_monotone(&self) -> bool {
        (0..self.table.len()).all(|i| {
            (0..self.arity).all(|b| {
                let above = i | (1 << b);
                above == i || self.table[i] <= self.table[above]
            })
        })
    }

    pub fn is_self_dual(&self) -> bool {
        let n = self.table.len();
        (0..n).all(|i| self.table[i] != self.table[n - 1 - i])
    }

    /// Degree ≤ 1 in the algebraic normal form: `f = c ⊕ x_{i1} ⊕ ... ⊕ x_{ik}`.
    pub fn is_affine(&self) -> bool {
        let c = self.table[0];
        // Linear coefficient of each variable, read off the unit rows.
        let coeff: Vec<bool> = (1..=self.arity)
            .map(|j| self.table[1 << (self.arity - j)] != c)
            .collect();
        (0..self.table.len()).all(|i| {
            let mut v = c;
            for (j, &cf) in coeff.iter().enumerate() {
                if cf && self.var_in_row(i, j + 1) {
                    v = !v;
                }
            }
            v == self.table[i]
        })
    }

    /// There is a variable that is 0 on every 0-row.
    pub fn is_zero_separating(&self) -> bool {
        (1..=self.arity).any(|j| {
            (0..self.table.len()).all(|i| self.table[i] || !self.var_in_row(i, j))
        })
    }

    /// There is a variable that is 1 on every 1-row.
    pub fn is_one_separating(&self) -> bool {
        (1..=self.arity).any(|j| {
            (0..self.table.len()).all(|i| !self.table[i] || self.var_in_row(i, j))
        })
    }
}

impl fmt::Debug for BoolFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolFun({}/{})", self.arity, self.table_str())
    }
}

impl fmt::Display for BoolFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.table_str())
    }
}

/// Hard upper bound on operator arity; tables beyond this are rejected.
pub const MAX_ARITY: usize = 16;

/// The built-in operators of the problem grammar (`id` is not a grammar
/// built-in but is used throughout the clone machinery).
pub mod builtin {
    use super::BoolFun;

    pub fn and() -> BoolFun {
        BoolFun::from_table_str(2, "0001").unwrap()
    }
    pub fn or() -> BoolFun {
        BoolFun::from_table_str(2, "0111").unwrap()
    }
    pub fn not() -> BoolFun {
        BoolFun::from_table_str(1, "10").unwrap()
    }
    pub fn xor() -> BoolFun {
        BoolFun::from_table_str(2, "0110").unwrap()
    }
    pub fn top() -> BoolFun {
        BoolFun::from_table_str(0, "1").unwrap()
    }
    pub fn bot() -> BoolFun {
        BoolFun::from_table_str(0, "0").unwrap()
    }
    pub fn id() -> BoolFun {
        BoolFun::from_table_str(1, "01").unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_of_and_is_or() {
        assert_eq!(builtin::and().dual(), builtin::or());
        assert_eq!(builtin::or().dual(), builtin::and());
    }

    #[test]
    fn majority_is_self_dual() {
        let maj = BoolFun::from_table_str(3, "00010111").unwrap();
        assert_eq!(maj.dual(), maj);
        assert!(maj.is_self_dual());
    }

    #[test]
    fn dual_of_id_is_id() {
        assert_eq!(builtin::id().dual(), builtin::id());
    }

    #[test]
    fn dual_is_an_involution_on_all_small_functions() {
        for arity in 0..=3usize {
            for bits in 0u32..(1 << (1 << arity)) {
                let table = (0..1usize << arity).map(|i| (bits >> i) & 1 == 1).collect();
                let f = BoolFun::new(arity, table).unwrap();
                assert_eq!(f.dual().dual(), f);
            }
        }
    }

    #[test]
    fn shape_predicates() {
        let and = builtin::and();
        assert_eq!(and.conjunction_vars(), Some(vec![1, 2]));
        assert_eq!(and.disjunction_vars(), None);
        assert!(and.is_monotone() && !and.is_self_dual());

        let or = builtin::or();
        assert_eq!(or.disjunction_vars(), Some(vec![1, 2]));

        // f(x, y) = x has a dummy variable and is the projection onto x1.
        let proj_with_dummy = BoolFun::from_table_str(2, "0011").unwrap();
        assert_eq!(proj_with_dummy.projection_index(), Some(1));
        assert_eq!(proj_with_dummy.conjunction_vars(), Some(vec![1]));

        let not = builtin::not();
        assert_eq!(not.literal_index(), Some((1, true)));
        assert!(not.is_self_dual() && !not.preserves_false());

        let xor = builtin::xor();
        assert!(xor.is_affine() && xor.preserves_false() && !xor.preserves_true());

        let top = builtin::top();
        assert!(top.is_const_true() && top.is_affine() && !top.is_self_dual());
    }

    #[test]
    fn separating_predicates() {
        let or_and = BoolFun::from_table_str(3, "00011111").unwrap(); // x ∨ (y ∧ z)
        assert!(or_and.is_zero_separating());
        assert!(!or_and.is_one_separating());
        let maj = BoolFun::from_table_str(3, "00010111").unwrap();
        assert!(!maj.is_zero_separating() && !maj.is_one_separating());
        assert!(builtin::id().is_zero_separating() && builtin::id().is_one_separating());
    }

    #[test]
    fn eval_uses_msb_first_row_order() {
        // Row index 6 = 110 means x1=1, x2=1, x3=0.
        let f = BoolFun::from_table_str(3, "00000010").unwrap();
        assert!(f.eval(&[true, true, false]));
        assert!(!f.eval(&[false, true, true]));
    }

    #[test]
    fn table_validation() {
        assert!(BoolFun::from_table_str(2, "011").is_err());
        assert!(BoolFun::from_table_str(1, "0a").is_err());
        assert!(BoolFun::from_table_str(0, "1").is_ok());
    }
}
