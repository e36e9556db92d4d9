//! Arity-bounded composition closure.
//!
//! The `k`-ary fragment of the clone `[base]` is computed as a worklist
//! fixpoint over packed `k`-ary truth tables: start from the `k` projections
//! (plus the nullary base constants) and keep applying every base function to
//! tuples of known members until nothing new appears. Variable identification
//! and permutation arise automatically from tuples built out of projections,
//! so this is exact for the `k`-ary fragment. Every member carries a
//! derivation from which a witnessing [`Circuit`] can be rebuilt.

use super::BoolFun;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Caps for closure computation. `max_arity` bounds the fragment arity
/// (the fragment may hold up to `2^(2^k)` functions, so this is the knob
/// that matters); `max_applications` bounds total composition work and
/// `max_functions` is a hard memory guard on top.
#[derive(Debug, Clone, Copy)]
pub struct ClosureLimits {
    pub max_arity: usize,
    pub max_functions: usize,
    pub max_applications: u64,
}

impl Default for ClosureLimits {
    fn default() -> Self {
        ClosureLimits { max_arity: 4, max_functions: 1 << 20, max_applications: 1 << 28 }
    }
}

/// Packing bound: `2^k` table bits must fit in a `u64`.
const PACK_MAX_ARITY: usize = 6;

/// A derivation term over a base: a projection, or a base function applied
/// to derived children. Evaluating the circuit pointwise reproduces the
/// truth table it was synthesized for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Circuit {
    /// Projection onto the j-th variable (1-based).
    Proj(usize),
    /// Application of `base[op]` to the argument circuits.
    App { op: usize, args: Vec<Circuit> },
}

impl Circuit {
    /// Evaluates the circuit on a full assignment over the fragment arity.
    pub fn eval(&self, base: &[BoolFun], args: &[bool]) -> bool {
        match self {
            Circuit::Proj(j) => args[*j - 1],
            Circuit::App { op, args: children } => {
                let vals: Vec<bool> = children.iter().map(|c| c.eval(base, args)).collect();
                base[*op].eval(&vals)
            }
        }
    }

    /// Number of nodes, used by size accounting in tests.
    pub fn size(&self) -> usize {
        match self {
            Circuit::Proj(_) => 1,
            Circuit::App { args, .. } => 1 + args.iter().map(Circuit::size).sum::<usize>(),
        }
    }
}

#[derive(Clone)]
enum Deriv {
    Proj(usize),
    App { op: usize, children: Vec<usize> },
}

/// The set of all `k`-ary members of `[base]`, with derivations.
pub struct ClosureFragment {
    arity: usize,
    base: Vec<BoolFun>,
    packed: Vec<u64>,
    derivs: Vec<Deriv>,
    index: HashMap<u64, usize>,
}

impl ClosureFragment {
    /// Computes the full `k`-ary fragment of `[base]`.
    pub fn compute(base: &[BoolFun], k: usize, limits: &ClosureLimits) -> Result<Self> {
        if k < 1 {
            return Err(Error::Resource("closure arity must be at least 1".into()));
        }
        if k > limits.max_arity || k > PACK_MAX_ARITY {
            return Err(Error::Resource(format!(
                "closure arity {k} exceeds the cap of {}",
                limits.max_arity.min(PACK_MAX_ARITY)
            )));
        }
        let mask = table_mask(k);
        let mut frag = ClosureFragment {
            arity: k,
            base: base.to_vec(),
            packed: Vec::new(),
            derivs: Vec::new(),
            index: HashMap::new(),
        };
        for j in 1..=k {
            frag.insert(proj_packed(k, j), Deriv::Proj(j));
        }
        for (op, f) in base.iter().enumerate() {
            if f.arity() == 0 {
                let t = if f.table()[0] { mask } else { 0 };
                frag.insert(t, Deriv::App { op, children: Vec::new() });
            }
        }

        let mut old_start = 0usize;
        let mut applications = 0u64;
        loop {
            let len = frag.packed.len();
            if len > limits.max_functions {
                return Err(Error::Resource(format!(
                    "closure fragment exceeds {} functions",
                    limits.max_functions
                )));
            }
            applications = applications.saturating_add(round_cost(base, old_start, len));
            if applications > limits.max_applications {
                return Err(Error::Resource(format!(
                    "closure computation exceeds {} compositions",
                    limits.max_applications
                )));
            }
            for op in 0..base.len() {
                let m = base[op].arity();
                if m == 0 {
                    continue;
                }
                let rows = one_rows(&base[op]);
                let mut tuple = vec![0usize; m];
                let mut visit = |t: &[usize]| {
                    let packed = apply_rows(&rows, t, &frag.packed, mask);
                    frag.insert(packed, Deriv::App { op, children: t.to_vec() });
                };
                // Every tuple must touch the frontier [old_start, len);
                // decompose by the first frontier position.
                for first_new in 0..m {
                    enumerate_tuples(&mut tuple, 0, first_new, old_start, len, &mut visit);
                }
            }
            if frag.packed.len() == len {
                break;
            }
            old_start = len;
        }
        Ok(frag)
    }

    fn insert(&mut self, packed: u64, deriv: Deriv) {
        if let std::collections::hash_map::Entry::Vacant(e) = self.index.entry(packed) {
            e.insert(self.packed.len());
            self.packed.push(packed);
            self.derivs.push(deriv);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.packed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.packed.is_empty()
    }

    /// Membership of `f` (of arity at most the fragment arity, padded with
    /// dummy variables) in the fragment.
    pub fn contains(&self, f: &BoolFun) -> bool {
        self.lookup(f).is_some()
    }

    fn lookup(&self, f: &BoolFun) -> Option<usize> {
        if f.arity() > self.arity {
            return None;
        }
        let padded = if f.arity() == self.arity { f.clone() } else { f.pad_to_arity(self.arity) };
        self.index.get(&pack(&padded)).copied()
    }

    /// All member functions, in derivation order.
    pub fn functions(&self) -> Vec<BoolFun> {
        self.packed.iter().map(|&p| unpack(self.arity, p)).collect()
    }

    /// A witnessing circuit for a member function.
    pub fn circuit_for(&self, f: &BoolFun) -> Option<Circuit> {
        self.lookup(f).map(|i| self.materialize(i))
    }

    fn materialize(&self, i: usize) -> Circuit {
        match &self.derivs[i] {
            Deriv::Proj(j) => Circuit::Proj(*j),
            Deriv::App { op, children } => Circuit::App {
                op: *op,
                args: children.iter().map(|&c| self.materialize(c)).collect(),
            },
        }
    }
}

/// Work estimate for one fixpoint round, used by the application budget.
fn round_cost(base: &[BoolFun], old_start: usize, len: usize) -> u64 {
    let frontier = (len - old_start) as u64;
    let mut total = 0u64;
    for f in base {
        let m = f.arity();
        for first_new in 0..m {
            let mut cnt = frontier;
            for pos in 0..m {
                if pos < first_new {
                    cnt = cnt.saturating_mul(old_start as u64);
                } else if pos > first_new {
                    cnt = cnt.saturating_mul(len as u64);
                }
            }
            total = total.saturating_add(cnt);
        }
    }
    total
}

/// Enumerates tuples with the frontier decomposition: positions before
/// `first_new` draw from `[0, old_start)`, position `first_new` from
/// `[old_start, len)`, later positions from `[0, len)`.
fn enumerate_tuples(
    tuple: &mut Vec<usize>,
    pos: usize,
    first_new: usize,
    old_start: usize,
    len: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == tuple.len() {
        visit(tuple);
        return;
    }
    let (lo, hi) = match pos.cmp(&first_new) {
        std::cmp::Ordering::Less => (0, old_start),
        std::cmp::Ordering::Equal => (old_start, len),
        std::cmp::Ordering::Greater => (0, len),
    };
    for v in lo..hi {
        tuple[pos] = v;
        enumerate_tuples(tuple, pos + 1, first_new, old_start, len, visit);
    }
}

/// The 1-rows of `f` as variable bitmasks (bit `j-1` set when `xj` is true).
fn one_rows(f: &BoolFun) -> Vec<u32> {
    let n = f.arity();
    f.table()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| {
            let mut row = 0u32;
            for j in 1..=n {
                if (i >> (n - j)) & 1 == 1 {
                    row |= 1 << (j - 1);
                }
            }
            row
        })
        .collect()
}

/// Applies a base function, given by its 1-rows, to packed argument tables.
fn apply_rows(rows: &[u32], tuple: &[usize], packed: &[u64], mask: u64) -> u64 {
    let mut out = 0u64;
    for &row in rows {
        let mut clause = mask;
        for (j, &t) in tuple.iter().enumerate() {
            let g = packed[t];
            clause &= if (row >> j) & 1 == 1 { g } else { !g };
        }
        out |= clause;
    }
    out & mask
}

/// Packed table of the projection onto `xj` (1-based) at arity `k`.
fn proj_packed(k: usize, j: usize) -> u64 {
    let mut out = 0u64;
    for i in 0..1usize << k {
        if (i >> (k - j)) & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

fn table_mask(k: usize) -> u64 {
    if (1usize << k) == 64 {
        u64::MAX
    } else {
        (1u64 << (1usize << k)) - 1
    }
}

fn pack(f: &BoolFun) -> u64 {
    let mut out = 0u64;
    for (i, &b) in f.table().iter().enumerate() {
        if b {
            out |= 1 << i;
        }
    }
    out
}

fn unpack(arity: usize, packed: u64) -> BoolFun {
    let table = (0..1usize << arity).map(|i| (packed >> i) & 1 == 1).collect();
    BoolFun::new(arity, table).unwrap()
}

/// Synthesizes a circuit over `base` whose pointwise evaluation equals
/// `target`. Nullary targets are padded to arity 1, so the returned circuit
/// takes one (ignored) argument.
pub fn synthesize_circuit(
    target: &BoolFun,
    base: &[BoolFun],
    limits: &ClosureLimits,
) -> Result<Circuit> {
    let k = target.arity().max(1);
    let frag = ClosureFragment::compute(base, k, limits)?;
    frag.circuit_for(target).ok_or_else(|| {
        Error::NotExpressible(format!(
            "no circuit over the base computes {}/{}",
            target.arity(),
            target.table_str()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::builtin;

    fn frag(base: &[BoolFun], k: usize) -> ClosureFragment {
        ClosureFragment::compute(base, k, &ClosureLimits::default()).unwrap()
    }

    #[test]
    fn and_fragment_at_arity_two() {
        let f = frag(&[builtin::and()], 2);
        let mut tables: Vec<String> = f.functions().iter().map(|g| g.table_str()).collect();
        tables.sort();
        assert_eq!(tables, vec!["0001", "0011", "0101"]);
    }

    #[test]
    fn xor_fragment_at_arity_one() {
        let f = frag(&[builtin::xor()], 1);
        let mut tables: Vec<String> = f.functions().iter().map(|g| g.table_str()).collect();
        tables.sort();
        // xor(x, x) = 0 joins the projection.
        assert_eq!(tables, vec!["00", "01"]);
    }

    #[test]
    fn empty_base_gives_projections_only() {
        let f = frag(&[], 2);
        let mut tables: Vec<String> = f.functions().iter().map(|g| g.table_str()).collect();
        tables.sort();
        assert_eq!(tables, vec!["0011", "0101"]);
    }

    #[test]
    fn arity_cap_is_enforced() {
        let err = ClosureFragment::compute(&[builtin::and()], 5, &ClosureLimits::default());
        assert!(matches!(err, Err(Error::Resource(_))));
    }

    #[test]
    fn synthesized_circuits_evaluate_to_target() {
        // or over the S00 base x∨(y∧z), by identifying y and z.
        let s00 = BoolFun::from_table_str(3, "00011111").unwrap();
        let or = builtin::or();
        let c = synthesize_circuit(&or, &[s00.clone()], &ClosureLimits::default()).unwrap();
        for i in 0..4u32 {
            let args = [(i >> 1) & 1 == 1, i & 1 == 1];
            assert_eq!(c.eval(&[s00.clone()], &args), or.eval(&args));
        }
    }

    #[test]
    fn nullary_constant_from_xor() {
        let bot = builtin::bot();
        let c = synthesize_circuit(&bot, &[builtin::xor()], &ClosureLimits::default()).unwrap();
        assert!(!c.eval(&[builtin::xor()], &[false]));
        assert!(!c.eval(&[builtin::xor()], &[true]));
    }

    #[test]
    fn identity_is_a_projection() {
        let maj = BoolFun::from_table_str(3, "00010111").unwrap();
        let c = synthesize_circuit(&builtin::id(), &[maj], &ClosureLimits::default()).unwrap();
        assert_eq!(c, Circuit::Proj(1));
    }

    #[test]
    fn not_expressible_is_reported() {
        let err = synthesize_circuit(&builtin::not(), &[builtin::and()], &ClosureLimits::default());
        assert!(matches!(err, Err(Error::NotExpressible(_))));
    }
}
