//! Finite groups as explicit multiplication tables over dense indices.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// Default bound on carrier size for every constructed table.
pub const DEFAULT_CARRIER_CAP: usize = 4096;

/// Environment variable that overrides [`DEFAULT_CARRIER_CAP`].
pub const CARRIER_CAP_ENV: &str = "BRACEFORGE_CARRIER_CAP";

/// The active carrier cap.
pub fn carrier_cap() -> usize {
    std::env::var(CARRIER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_CARRIER_CAP)
}

fn check_cap(order: usize) -> Result<()> {
    let cap = carrier_cap();
    if order > cap {
        return Err(Error::Capacity { order, cap });
    }
    Ok(())
}

/// First group axiom found to fail on a table, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum GroupViolation {
    Shape { detail: String },
    Closure { a: usize, b: usize },
    Identity { a: usize },
    Inverse { a: usize },
    Associativity { a: usize, b: usize, c: usize },
}

impl GroupViolation {
    /// The offending elements, empty for shape errors.
    pub fn witness(&self) -> Vec<usize> {
        match *self {
            GroupViolation::Shape { .. } => Vec::new(),
            GroupViolation::Closure { a, b } => vec![a, b],
            GroupViolation::Identity { a } | GroupViolation::Inverse { a } => vec![a],
            GroupViolation::Associativity { a, b, c } => vec![a, b, c],
        }
    }
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupViolation::Shape { detail } => write!(f, "malformed table: {detail}"),
            GroupViolation::Closure { a, b } => write!(f, "closure fails at ({a}, {b})"),
            GroupViolation::Identity { a } => write!(f, "identity fails against {a}"),
            GroupViolation::Inverse { a } => write!(f, "inverse of {a} is wrong"),
            GroupViolation::Associativity { a, b, c } => {
                write!(f, "associativity fails at ({a}, {b}, {c})")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    label: String,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Assembles a table without checking anything. Use [`GroupTable::validate`]
    /// before relying on it.
    pub fn from_raw_parts(
        order: usize,
        mul: Vec<u32>,
        identity: usize,
        inv: Vec<u32>,
        label: impl Into<String>,
    ) -> Self {
        GroupTable {
            order,
            mul,
            identity,
            inv,
            label: label.into(),
        }
    }

    /// Builds a validated group from a row-major multiplication table,
    /// deriving the identity and inverses.
    pub fn from_table(order: usize, mul: Vec<u32>, label: impl Into<String>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        check_cap(order)?;
        if mul.len() != order * order {
            return Err(GroupViolation::Shape {
                detail: format!("table has {} entries, expected {}", mul.len(), order * order),
            }
            .into());
        }
        if let Some(pos) = mul.iter().position(|&x| x as usize >= order) {
            return Err(GroupViolation::Closure {
                a: pos / order,
                b: pos % order,
            }
            .into());
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] as usize == x && mul[x * order + e] as usize == x))
            .ok_or(GroupViolation::Identity { a: 0 })?;
        let mut inv = vec![0u32; order];
        for (a, slot) in inv.iter_mut().enumerate() {
            let row = &mul[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&x| x as usize == identity)
                .ok_or(GroupViolation::Inverse { a })?;
            *slot = b as u32;
        }
        let g = GroupTable {
            order,
            mul,
            identity,
            inv,
            label: label.into(),
        };
        g.validate()?;
        Ok(g)
    }

    /// Builds a validated group from a multiplication function.
    pub fn from_fn(
        order: usize,
        label: impl Into<String>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        check_cap(order)?;
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mul.push(f(a, b) as u32);
            }
        }
        Self::from_table(order, mul, label)
    }

    /// The additive group Z/nZ with residue `i` at index `i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Self::from_fn(n, format!("Z/{n}"), |a, b| (a + b) % n)
    }

    /// Product with the pair `(i, j)` stored at index `i * h.order() + j`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<Self> {
        let order = g
            .order
            .checked_mul(h.order)
            .ok_or(Error::Capacity { order: usize::MAX, cap: carrier_cap() })?;
        check_cap(order)?;
        let m = h.order;
        Self::from_fn(order, format!("{} x {}", g.label, h.label), |x, y| {
            g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
        })
    }

    /// `(Z/q)^r` as an iterated direct product; coordinate 1 is the most
    /// significant base-`q` digit of the index.
    pub fn elementary_abelian(q: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let base = Self::cyclic(q)?;
        let mut g = base.clone();
        for _ in 1..r {
            g = Self::direct_product(&g, &base)?;
        }
        g.label = format!("(Z/{q})^{r}");
        Ok(g)
    }

    /// The symmetric group on `n` points; permutations are indexed by
    /// lexicographic rank and `a * b` applies `b` first.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let perms = permutations(n);
        check_cap(perms.len())?;
        Self::from_fn(perms.len(), format!("S{n}"), |a, b| {
            let composed: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
            permutation_rank(&composed)
        })
    }

    /// Dihedral group of order `2n`: `r^i` at index `i`, `r^i s` at `n + i`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Self::from_fn(2 * n, format!("D{n}"), |x, y| {
            let (i, j) = (x % n, x / n);
            let (k, l) = (y % n, y / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            ((j + l) % 2) * n + rot
        })
    }

    /// Quaternion group: `a^i x^j` at index `i + 4j` with `a^4 = 1`,
    /// `x^2 = a^2`, `x a x^-1 = a^-1`.
    pub fn quaternion() -> Result<Self> {
        Self::from_fn(8, "Q8", |x, y| {
            let (i, j) = (x % 4, x / 4);
            let (k, l) = (y % 4, y / 4);
            let rot = if j == 0 { (i + k) % 4 } else { (i + 4 - k) % 4 };
            match (j, l) {
                (1, 1) => (rot + 2) % 4,
                _ => rot + 4 * ((j + l) % 2),
            }
        })
    }

    /// The multiplicative group of units mod `n`, elements in increasing
    /// residue order. See [`GroupTable::units_residues`].
    pub fn units_mod(n: u64) -> Result<Self> {
        let units = Self::units_residues(n);
        if units.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        let pos = |r: u64| units.binary_search(&r).expect("units are closed");
        Self::from_fn(units.len(), format!("U({n})"), |a, b| {
            pos(units[a] * units[b] % n)
        })
    }

    pub fn units_residues(n: u64) -> Vec<u64> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![0];
        }
        (1..n).filter(|&r| gcd(r, n) == 1).collect()
    }

    /// Same carrier with the multiplication reversed.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        GroupTable {
            order: n,
            mul,
            identity: self.identity,
            inv: self.inv.clone(),
            label: format!("{}^op", self.label),
        }
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `g s g^-1`.
    pub fn conjugate(&self, g: usize, s: usize) -> usize {
        self.mul(self.mul(g, s), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.commuting_witness().is_none()
    }

    pub(crate) fn commuting_witness(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn trivial_set(&self) -> ElemSet {
        ElemSet::singleton(self.order, self.identity)
    }

    /// Checks the axioms in order (shape, closure, identity, inverses,
    /// associativity) and reports the first failure.
    pub fn validate(&self) -> std::result::Result<(), GroupViolation> {
        let n = self.order;
        if n == 0 {
            return Err(GroupViolation::Shape { detail: "empty carrier".into() });
        }
        if self.mul.len() != n * n || self.inv.len() != n || self.identity >= n {
            return Err(GroupViolation::Shape {
                detail: format!(
                    "order {n} with {} table entries, {} inverses, identity {}",
                    self.mul.len(),
                    self.inv.len(),
                    self.identity
                ),
            });
        }
        if let Some(pos) = self.mul.iter().position(|&x| x as usize >= n) {
            return Err(GroupViolation::Closure { a: pos / n, b: pos % n });
        }
        if let Some(pos) = self.inv.iter().position(|&x| x as usize >= n) {
            return Err(GroupViolation::Inverse { a: pos });
        }
        let e = self.identity;
        if let Some(a) = (0..n).find(|&a| self.mul(e, a) != a || self.mul(a, e) != a) {
            return Err(GroupViolation::Identity { a });
        }
        if let Some(a) =
            (0..n).find(|&a| self.mul(a, self.inv(a)) != e || self.mul(self.inv(a), a) != e)
        {
            return Err(GroupViolation::Inverse { a });
        }
        if let Some((a, b, c)) = self.associativity_witness() {
            return Err(GroupViolation::Associativity { a, b, c });
        }
        Ok(())
    }

    // If (xb)y = x(by) holds for every b in a generating set, it holds for
    // all b, so the cubic scan only runs to locate a witness.
    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        let middle_ok = |b: usize| {
            let row_b = self.row(b);
            (0..n).all(|a| {
                let row_a = self.row(a);
                let row_ab = self.row(row_a[b] as usize);
                (0..n).all(|c| row_ab[c] == row_a[row_b[c] as usize])
            })
        };
        let gens = self.generators_of(&self.full_set()).to_vec();
        if gens.par_iter().all(|&b| middle_ok(b)) {
            return None;
        }
        self.associativity_scan()
    }

    /// First `(a, b, c)` in lexicographic order with `(ab)c ≠ a(bc)`, by a
    /// full cubic scan.
    pub fn associativity_scan(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        (0..n).into_par_iter().find_map_first(|a| {
            let row_a = self.row(a);
            for b in 0..n {
                let row_ab = self.row(row_a[b] as usize);
                let row_b = self.row(b);
                for c in 0..n {
                    if row_ab[c] != row_a[row_b[c] as usize] {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Greedy generating set of `s`: scanning in increasing order, each
    /// element not yet reached is added.
    ///
    /// Reachability is by right multiplication from the identity, so this
    /// also works on tables not yet known to be associative.
    pub fn generators_of(&self, s: &ElemSet) -> ElemSet {
        let mut gens = ElemSet::empty(self.order);
        let mut span = self.trivial_set();
        for x in s.iter() {
            if !span.contains(x) {
                gens.insert(x);
                span = self.generated_subgroup(&gens);
            }
        }
        gens
    }

    /// Smallest subgroup containing `gens`, by breadth-first closure.
    pub fn generated_subgroup(&self, gens: &ElemSet) -> ElemSet {
        let gens: Vec<usize> = gens.iter().filter(|&g| g != self.identity).collect();
        let mut seen = ElemSet::singleton(self.order, self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        if s.universe() != self.order || !s.contains(self.identity) {
            return false;
        }
        let elems = s.to_vec();
        elems.iter().all(|&a| s.contains(self.inv(a)))
            && elems
                .iter()
                .all(|&a| elems.iter().all(|&b| s.contains(self.mul(a, b))))
    }

    /// Whether `g s g^-1 ⊆ s` for every `g`. Errors if `s` is not a subgroup.
    pub fn is_normal(&self, s: &ElemSet) -> Result<bool> {
        if !self.is_subgroup(s) {
            return Err(Error::Domain(format!(
                "{:?} is not a subgroup of {}",
                s, self.label
            )));
        }
        Ok(self.normality_witness(s).is_none())
    }

    /// `(g, x)` with `g x g^-1` outside `s`, if any.
    pub(crate) fn normality_witness(&self, s: &ElemSet) -> Option<(usize, usize)> {
        let elems = s.to_vec();
        (0..self.order)
            .flat_map(|g| elems.iter().map(move |&x| (g, x)))
            .find(|&(g, x)| !s.contains(self.conjugate(g, x)))
    }

    /// Subgroup generated by all commutators `a b a^-1 b^-1`.
    pub fn commutator_subgroup(&self) -> ElemSet {
        self.commutator_of(&self.full_set(), &self.full_set())
    }

    /// Subgroup generated by `[x, y]` for `x ∈ xs`, `y ∈ ys`.
    pub fn commutator_of(&self, xs: &ElemSet, ys: &ElemSet) -> ElemSet {
        let ys_v = ys.to_vec();
        let gens = ElemSet::from_elems(
            self.order,
            xs.iter().flat_map(|x| ys_v.iter().map(move |&y| (x, y))).map(|(x, y)| self.commutator(x, y)),
        );
        self.generated_subgroup(&gens)
    }

    /// `{x y : x ∈ s, y ∈ t}`.
    pub fn set_product(&self, s: &ElemSet, t: &ElemSet) -> ElemSet {
        let tv = t.to_vec();
        ElemSet::from_elems(
            self.order,
            s.iter().flat_map(|x| tv.iter().map(move |&y| self.mul(x, y))),
        )
    }

    /// Whether the elements of `s` pairwise commute.
    pub fn is_abelian_set(&self, s: &ElemSet) -> bool {
        let v = s.to_vec();
        v.iter()
            .all(|&a| v.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Lexicographic rank of a permutation of `0..n`; the index used by
/// [`GroupTable::symmetric`].
pub fn permutation_rank(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}
