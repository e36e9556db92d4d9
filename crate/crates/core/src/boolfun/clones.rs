//! The clone inventory: symbolic identifiers, canonical bases, membership
//! predicates, and the two inclusion directions used to identify a base's
//! clone exactly.
//!
//! Inclusion `c ⊆ [base]` is decided by closure enumeration (the canonical
//! base functions of `c`, all of arity ≤ 3, must occur in the 3-ary closure
//! fragment of `base`). Inclusion `[base] ⊆ c` is decided by per-function
//! shape predicates:
//!
//! - E family: conjunctions of a nonempty variable subset, plus the
//!   constants allowed by the sub-index; V family dually with disjunctions.
//! - N family: literals, plus constants.
//! - L family: algebraic normal form of degree ≤ 1, refined by
//!   0-preservation (L0), 1-preservation (L1), both (L2), self-duality (L3).
//! - D1: self-dual and 0- and 1-preserving; D2: self-dual and monotone.
//! - M0/M1: monotone and 0-/1-preserving.
//! - I family: projections plus constants.
//! - S00/S10: monotone, 0- and 1-preserving, and 0-/1-separating (there is
//!   a variable that is 0 on every 0-row, resp. 1 on every 1-row). These two
//!   are used internally by [`identify_clone`].
//!
//! Identification of clones outside this inventory (for example the deeper
//! levels of the separating chains) is out of scope; [`identify_clone`]
//! returns [`CloneId::Other`] for them.

use super::{builtin, BoolFun, ClosureFragment, ClosureLimits};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Symbolic clone identifier. `Other` stands for any clone outside the
/// inventory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(clippy::upper_case_acronyms)]
pub enum CloneId {
    BF,
    S00,
    S10,
    D1,
    D2,
    M0,
    M1,
    L,
    L0,
    L1,
    L2,
    L3,
    V,
    V0,
    V1,
    V2,
    E,
    E0,
    E1,
    E2,
    N,
    N2,
    I,
    I0,
    I1,
    I2,
    Other,
}

/// Every inventory clone, in a fixed reporting order.
pub const CLONE_INVENTORY: [CloneId; 26] = [
    CloneId::BF,
    CloneId::S00,
    CloneId::S10,
    CloneId::D1,
    CloneId::D2,
    CloneId::M0,
    CloneId::M1,
    CloneId::L,
    CloneId::L0,
    CloneId::L1,
    CloneId::L2,
    CloneId::L3,
    CloneId::V,
    CloneId::V0,
    CloneId::V1,
    CloneId::V2,
    CloneId::E,
    CloneId::E0,
    CloneId::E1,
    CloneId::E2,
    CloneId::N,
    CloneId::N2,
    CloneId::I,
    CloneId::I0,
    CloneId::I1,
    CloneId::I2,
];

impl fmt::Display for CloneId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CloneId::BF => "BF",
            CloneId::S00 => "S00",
            CloneId::S10 => "S10",
            CloneId::D1 => "D1",
            CloneId::D2 => "D2",
            CloneId::M0 => "M0",
            CloneId::M1 => "M1",
            CloneId::L => "L",
            CloneId::L0 => "L0",
            CloneId::L1 => "L1",
            CloneId::L2 => "L2",
            CloneId::L3 => "L3",
            CloneId::V => "V",
            CloneId::V0 => "V0",
            CloneId::V1 => "V1",
            CloneId::V2 => "V2",
            CloneId::E => "E",
            CloneId::E0 => "E0",
            CloneId::E1 => "E1",
            CloneId::E2 => "E2",
            CloneId::N => "N",
            CloneId::N2 => "N2",
            CloneId::I => "I",
            CloneId::I0 => "I0",
            CloneId::I1 => "I1",
            CloneId::I2 => "I2",
            CloneId::Other => "OTHER",
        };
        f.write_str(s)
    }
}

impl FromStr for CloneId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase();
        for c in CLONE_INVENTORY {
            if c.to_string() == up {
                return Ok(c);
            }
        }
        if up == "OTHER" {
            return Ok(CloneId::Other);
        }
        Err(Error::UnsupportedClone(s.to_string()))
    }
}

/// Named canonical functions used by the bases and the instance generator.
pub(crate) mod named {
    use super::builtin;
    use super::BoolFun;

    pub fn maj() -> BoolFun {
        BoolFun::from_table_str(3, "00010111").unwrap()
    }
    /// maj(x, y, ¬z) — the canonical D1 base function.
    pub fn maj_n() -> BoolFun {
        BoolFun::from_table_str(3, "00101011").unwrap()
    }
    /// x ∨ (y ∧ z) — the canonical S00 base function.
    pub fn or_and() -> BoolFun {
        BoolFun::from_table_str(3, "00011111").unwrap()
    }
    /// x ∧ (y ∨ z) — the canonical S10 base function.
    pub fn and_or() -> BoolFun {
        BoolFun::from_table_str(3, "00000111").unwrap()
    }
    pub fn xor3() -> BoolFun {
        BoolFun::from_table_str(3, "01101001").unwrap()
    }
    /// x ⊕ y ⊕ z ⊕ ⊤.
    pub fn nxor3() -> BoolFun {
        BoolFun::from_table_str(3, "10010110").unwrap()
    }
    /// x ↔ y.
    pub fn eqv() -> BoolFun {
        BoolFun::from_table_str(2, "1001").unwrap()
    }
    pub fn id() -> BoolFun {
        builtin::id()
    }
}

impl CloneId {
    /// The canonical base generating this clone, with operator names.
    /// Panics on `Other`, which has no base in the inventory.
    pub fn canonical_base(self) -> Vec<(&'static str, BoolFun)> {
        use named::*;
        match self {
            CloneId::Other => panic!("OTHER has no canonical base"),
            CloneId::BF => vec![("and", builtin::and()), ("not", builtin::not())],
            CloneId::S00 => vec![("or_and", or_and())],
            CloneId::S10 => vec![("and_or", and_or())],
            CloneId::D1 => vec![("maj_n", maj_n())],
            CloneId::D2 => vec![("maj", maj())],
            CloneId::M0 => vec![("and", builtin::and()), ("or", builtin::or()), ("bot", builtin::bot())],
            CloneId::M1 => vec![("and", builtin::and()), ("or", builtin::or()), ("top", builtin::top())],
            CloneId::L => vec![("xor", builtin::xor()), ("top", builtin::top())],
            CloneId::L0 => vec![("xor", builtin::xor())],
            CloneId::L1 => vec![("eqv", eqv())],
            CloneId::L2 => vec![("xor3", xor3())],
            CloneId::L3 => vec![("nxor3", nxor3())],
            CloneId::V => vec![("or", builtin::or()), ("top", builtin::top()), ("bot", builtin::bot())],
            CloneId::V0 => vec![("or", builtin::or()), ("bot", builtin::bot())],
            CloneId::V1 => vec![("or", builtin::or()), ("top", builtin::top())],
            CloneId::V2 => vec![("or", builtin::or())],
            CloneId::E => vec![("and", builtin::and()), ("top", builtin::top()), ("bot", builtin::bot())],
            CloneId::E0 => vec![("and", builtin::and()), ("bot", builtin::bot())],
            CloneId::E1 => vec![("and", builtin::and()), ("top", builtin::top())],
            CloneId::E2 => vec![("and", builtin::and())],
            CloneId::N => vec![("not", builtin::not()), ("top", builtin::top())],
            CloneId::N2 => vec![("not", builtin::not())],
            CloneId::I => vec![("id", id()), ("top", builtin::top()), ("bot", builtin::bot())],
            CloneId::I0 => vec![("id", id()), ("bot", builtin::bot())],
            CloneId::I1 => vec![("id", id()), ("top", builtin::top())],
            CloneId::I2 => vec![("id", id())],
        }
    }

    /// The dual clone (E ↔ V, E0 ↔ V1, E1 ↔ V0, E2 ↔ V2, L0 ↔ L1,
    /// S00 ↔ S10, I0 ↔ I1, M0 ↔ M1; the rest are self-dual as clones).
    /// Note the cross pairing: dualizing swaps the preserved constant, so
    /// `[∧,⊥]` maps to `[∨,⊤]` and vice versa.
    pub fn dual(self) -> CloneId {
        match self {
            CloneId::E => CloneId::V,
            CloneId::V => CloneId::E,
            CloneId::E0 => CloneId::V1,
            CloneId::V1 => CloneId::E0,
            CloneId::E1 => CloneId::V0,
            CloneId::V0 => CloneId::E1,
            CloneId::E2 => CloneId::V2,
            CloneId::V2 => CloneId::E2,
            CloneId::L0 => CloneId::L1,
            CloneId::L1 => CloneId::L0,
            CloneId::S00 => CloneId::S10,
            CloneId::S10 => CloneId::S00,
            CloneId::I0 => CloneId::I1,
            CloneId::I1 => CloneId::I0,
            CloneId::M0 => CloneId::M1,
            CloneId::M1 => CloneId::M0,
            other => other,
        }
    }

    /// Membership predicate: is `f` an element of this clone?
    pub fn member(self, f: &BoolFun) -> bool {
        match self {
            CloneId::BF => true,
            CloneId::E => f.is_constant() || f.conjunction_vars().is_some(),
            CloneId::E0 => f.is_const_false() || f.conjunction_vars().is_some(),
            CloneId::E2 => f.conjunction_vars().is_some(),
            CloneId::V => f.is_constant() || f.disjunction_vars().is_some(),
            CloneId::V0 => f.is_const_false() || f.disjunction_vars().is_some(),
            CloneId::V1 => f.is_const_true() || f.disjunction_vars().is_some(),
            CloneId::V2 => f.disjunction_vars().is_some(),
            CloneId::N => f.is_constant() || f.is_literal_shape(),
            CloneId::N2 => f.is_literal_shape(),
            CloneId::I => f.is_constant() || f.is_projection(),
            CloneId::I0 => f.is_const_false() || f.is_projection(),
            CloneId::I1 => f.is_const_true() || f.is_projection(),
            CloneId::I2 => f.is_projection(),
            CloneId::L => f.is_affine(),
            CloneId::L0 => f.is_affine() && f.preserves_false(),
            CloneId::L1 => f.is_affine() && f.preserves_true(),
            CloneId::L2 => f.is_affine() && f.preserves_false() && f.preserves_true(),
            CloneId::L3 => f.is_affine() && f.is_self_dual(),
            CloneId::D1 => f.is_self_dual() && f.preserves_false() && f.preserves_true(),
            CloneId::D2 => f.is_self_dual() && f.is_monotone(),
            CloneId::M0 => f.is_monotone() && f.preserves_false(),
            CloneId::M1 => f.is_monotone() && f.preserves_true(),
            CloneId::S00 => {
                f.is_monotone()
                    && f.preserves_false()
                    && f.preserves_true()
                    && f.is_zero_separating()
            }
            CloneId::S10 => {
                f.is_monotone()
                    && f.preserves_false()
                    && f.preserves_true()
                    && f.is_one_separating()
            }
            CloneId::Other => false,
        }
    }
}

/// Precomputed view of a base: its 3-ary closure fragment plus the base
/// functions themselves. All inclusion queries against the inventory go
/// through this, so classification computes the closure once per instance.
pub struct BaseAnalysis {
    base: Vec<BoolFun>,
    fragment: ClosureFragment,
}

impl BaseAnalysis {
    pub fn new(base: &[BoolFun]) -> Result<Self> {
        // All canonical base functions have arity ≤ 3, so the 3-ary fragment
        // decides every `c ⊆ [base]` query we need.
        let fragment = ClosureFragment::compute(base, 3, &ClosureLimits::default())?;
        Ok(BaseAnalysis { base: base.to_vec(), fragment })
    }

    /// Decides `c ⊆ [base]`.
    pub fn contains_clone(&self, c: CloneId) -> Result<bool> {
        if c == CloneId::Other {
            return Err(Error::UnsupportedClone(
                "cannot test inclusion of an unidentified clone".into(),
            ));
        }
        Ok(c.canonical_base().iter().all(|(_, f)| self.fragment.contains(f)))
    }

    /// Decides `[base] ⊆ c` via the membership predicates.
    pub fn subset_of(&self, c: CloneId) -> bool {
        self.base.iter().all(|f| c.member(f))
    }

    /// Exact clone equality against the inventory; the two directions are
    /// `contains_clone` and `subset_of`. Distinct clones differ as sets, so
    /// at most one identifier matches.
    pub fn identify(&self) -> CloneId {
        for c in CLONE_INVENTORY {
            if self.subset_of(c) && self.contains_clone(c).unwrap_or(false) {
                return c;
            }
        }
        CloneId::Other
    }

    /// Whether `¬` is expressible, i.e. N2 ⊆ [base].
    pub fn has_negation(&self) -> Result<bool> {
        self.contains_clone(CloneId::N2)
    }

    /// `[base] = L2`: all members are affine and 0- and 1-preserving, and at
    /// least one is not a projection (I2 is the only proper subclone of L2).
    pub fn equals_l2(&self) -> bool {
        let eq = self.subset_of(CloneId::L2) && self.base.iter().any(|f| !f.is_projection());
        // Cross-check the lattice fact the decision relies on.
        debug_assert!(!eq || self.contains_clone(CloneId::L2).unwrap_or(false));
        eq
    }

    /// `[base] = I2`: every member is a projection.
    pub fn equals_i2(&self) -> bool {
        self.base.iter().all(|f| f.is_projection())
    }
}

/// Decides `c ⊆ [base]` for an inventory clone `c`.
pub fn clone_contains(c: CloneId, base: &[BoolFun]) -> Result<bool> {
    BaseAnalysis::new(base)?.contains_clone(c)
}

/// Decides `[base] ⊆ c` for an inventory clone `c`.
pub fn clone_subset(base: &[BoolFun], c: CloneId) -> Result<bool> {
    if c == CloneId::Other {
        return Err(Error::UnsupportedClone("OTHER has no membership predicate".into()));
    }
    Ok(base.iter().all(|f| c.member(f)))
}

/// Returns the inventory clone equal to `[base]`, or `Other`.
pub fn identify_clone(base: &[BoolFun]) -> Result<CloneId> {
    Ok(BaseAnalysis::new(base)?.identify())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contains_examples() {
        assert!(clone_contains(CloneId::E2, &[builtin::and(), builtin::not()]).unwrap());
        assert!(!clone_contains(CloneId::N2, &[builtin::and()]).unwrap());
        assert!(clone_contains(CloneId::I2, &[named::maj()]).unwrap());
        assert!(clone_contains(CloneId::I2, &[]).unwrap());
    }

    #[test]
    fn subset_examples() {
        assert!(clone_subset(&[builtin::xor()], CloneId::L).unwrap());
        assert!(clone_subset(&[named::maj()], CloneId::D1).unwrap());
        assert!(!clone_subset(&[builtin::and()], CloneId::N).unwrap());
    }

    #[test]
    fn identify_examples() {
        assert_eq!(identify_clone(&[builtin::and(), builtin::not()]).unwrap(), CloneId::BF);
        assert_eq!(identify_clone(&[named::maj()]).unwrap(), CloneId::D2);
        assert_eq!(identify_clone(&[named::id()]).unwrap(), CloneId::I2);
        assert_eq!(identify_clone(&[]).unwrap(), CloneId::I2);
        // {∧,∨} generates all monotone 0/1-preserving functions, which is
        // outside the inventory.
        assert_eq!(identify_clone(&[builtin::and(), builtin::or()]).unwrap(), CloneId::Other);
    }

    #[test]
    fn canonical_bases_identify_as_themselves() {
        for c in CLONE_INVENTORY {
            let base: Vec<BoolFun> = c.canonical_base().into_iter().map(|(_, f)| f).collect();
            assert_eq!(identify_clone(&base).unwrap(), c, "base of {c}");
            assert!(clone_contains(c, &base).unwrap());
            assert!(clone_subset(&base, c).unwrap());
        }
    }

    #[test]
    fn dual_base_identifies_as_dual_clone() {
        for c in CLONE_INVENTORY {
            let dual_base: Vec<BoolFun> =
                c.canonical_base().into_iter().map(|(_, f)| f.dual()).collect();
            assert_eq!(identify_clone(&dual_base).unwrap(), c.dual(), "dual of {c}");
        }
    }

    #[test]
    fn l2_equality_decision() {
        let a = BaseAnalysis::new(&[named::xor3()]).unwrap();
        assert!(a.equals_l2());
        let b = BaseAnalysis::new(&[named::id()]).unwrap();
        assert!(!b.equals_l2());
        assert!(b.equals_i2());
        // A five-variable odd parity is still exactly L2.
        let parity5 = BoolFun::new(
            5,
            (0..32usize).map(|i| i.count_ones() % 2 == 1).collect(),
        )
        .unwrap();
        let c = BaseAnalysis::new(&[parity5]).unwrap();
        assert!(c.equals_l2());
    }
}
