//! Skew braces: two group tables on one carrier tied by the brace relation
//! `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{GroupTable, GroupViolation};

#[derive(Clone, PartialEq, Eq)]
pub struct SkewBrace {
    order: usize,
    dot: GroupTable,
    circle: GroupTable,
    /// `lambda[a][b] = a⁻¹·(a∘b)`
    lambda: Vec<u32>,
    /// `lambda_op[a][b] = (a∘b)·a⁻¹`
    lambda_op: Vec<u32>,
    label: String,
}

impl fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewBrace")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// `A′ = A*A`, `A³ = A*A′`, `A⁽³⁾ = A′*A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedSeries {
    pub derived: ElemSet,
    pub left3: ElemSet,
    pub right3: ElemSet,
}

/// Membership of a subset in each substructure notion, for the brace and
/// for its opposite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SubsetStatus {
    pub sub_skew_brace: bool,
    pub ideal: bool,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub left_ideal_op: bool,
    pub right_ideal_op: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// `{x·y : x ∈ B, y ∈ C}` is the whole carrier.
    pub dot_product: bool,
    /// `{x∘y : x ∈ B, y ∈ C}` is the whole carrier.
    pub circle_product: bool,
    /// `B ∩ C = {1}`.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetFacts {
    pub name: String,
    pub size: usize,
    pub status: SubsetStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub label: String,
    pub order: usize,
    pub is_trivial: bool,
    pub is_almost_trivial: bool,
    pub is_two_sided: bool,
    pub is_meta_trivial: bool,
    pub is_left_nilpotent3: bool,
    pub is_right_nilpotent3: bool,
    pub derived_size: usize,
    pub left3_size: usize,
    pub right3_size: usize,
    pub derived: ElemSet,
    pub left3: ElemSet,
    pub right3: ElemSet,
    pub ideal_facts: Vec<SubsetFacts>,
}

impl SkewBrace {
    /// Validates both groups and the brace relation over all triples.
    pub fn new(dot: GroupTable, circle: GroupTable) -> Result<Self> {
        if dot.order() != circle.order() {
            return Err(Error::Shape(format!(
                "dot has order {} but circle has order {}",
                dot.order(),
                circle.order()
            )));
        }
        if dot.identity() != circle.identity() {
            return Err(Error::Shape(format!(
                "dot identity {} differs from circle identity {}",
                dot.identity(),
                circle.identity()
            )));
        }
        dot.validate()?;
        circle.validate()?;
        let label = format!("({}, {})", dot.label(), circle.label());
        let br = Self::assemble(dot, circle, label);
        br.check_lambda_rows()?;
        if let Some((a, b, c)) = br.relation_witness() {
            return Err(Error::BraceAxiom { a, b, c });
        }
        Ok(br)
    }

    fn assemble(dot: GroupTable, circle: GroupTable, label: String) -> Self {
        let n = dot.order();
        let mut lambda = vec![0u32; n * n];
        let mut lambda_op = vec![0u32; n * n];
        for a in 0..n {
            let ai = dot.inv(a);
            for b in 0..n {
                let ab = circle.mul(a, b);
                lambda[a * n + b] = dot.mul(ai, ab) as u32;
                lambda_op[a * n + b] = dot.mul(ab, ai) as u32;
            }
        }
        SkewBrace {
            order: n,
            dot,
            circle,
            lambda,
            lambda_op,
            label,
        }
    }

    // Fast reject before the cubic scan.
    fn check_lambda_rows(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let x = self.lambda(a, b);
                if seen[x] == a {
                    return Err(Error::Domain(format!("lambda_{a} is not a permutation")));
                }
                seen[x] = a;
            }
        }
        Ok(())
    }

    // The b with λ_a(bc) = λ_a(b)λ_a(c) for all c are closed under the dot
    // product, so checking dot generators decides the relation; the cubic
    // scan only runs to locate the first witness.
    fn relation_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        let (dot, circle) = (&self.dot, &self.circle);
        let holds = |a: usize, b: usize, c: usize| {
            circle.mul(a, dot.mul(b, c)) == dot.mul(self.lambda_op(a, b), circle.mul(a, c))
        };
        let gens = dot.generators_of(&dot.full_set()).to_vec();
        if (0..n)
            .into_par_iter()
            .all(|a| gens.iter().all(|&b| (0..n).all(|c| holds(a, b, c))))
        {
            return None;
        }
        self.relation_scan()
    }

    /// First `(a, b, c)` in lexicographic order breaking
    /// `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)`, by a full cubic scan.
    pub fn relation_scan(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        let (dot, circle) = (&self.dot, &self.circle);
        (0..n).into_par_iter().find_map_first(|a| {
            let circ_a = circle.row(a);
            // (a∘b)·a⁻¹ for every b
            for b in 0..n {
                let dot_b = dot.row(b);
                let lhs_row = dot.row(self.lambda_op(a, b));
                for c in 0..n {
                    if circ_a[dot_b[c] as usize] != lhs_row[circ_a[c] as usize] {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Re-checks associativity of both tables and the brace relation over
    /// every triple, without the generator shortcut.
    pub fn validate_exhaustive(&self) -> Result<()> {
        for g in [&self.dot, &self.circle] {
            if let Some((a, b, c)) = g.associativity_scan() {
                return Err(GroupViolation::Associativity { a, b, c }.into());
            }
        }
        match self.relation_scan() {
            Some((a, b, c)) => Err(Error::BraceAxiom { a, b, c }),
            None => Ok(()),
        }
    }

    /// `∘ = ·`.
    pub fn trivial(g: &GroupTable) -> Self {
        let label = format!("trivial({})", g.label());
        Self::assemble(g.clone(), g.clone(), label)
    }

    /// `a∘b = b·a`.
    pub fn almost_trivial(g: &GroupTable) -> Self {
        let label = format!("almost-trivial({})", g.label());
        Self::assemble(g.clone(), g.opposite(), label)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dot(&self) -> &GroupTable {
        &self.dot
    }

    pub fn circle(&self) -> &GroupTable {
        &self.circle
    }

    pub fn identity(&self) -> usize {
        self.dot.identity()
    }

    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order + b] as usize
    }

    #[inline]
    pub fn lambda_op(&self, a: usize, b: usize) -> usize {
        self.lambda_op[a * self.order + b] as usize
    }

    /// Inverse in the circle group.
    pub fn circle_inv(&self, a: usize) -> usize {
        self.circle.inv(a)
    }

    /// `a*b = a⁻¹·(a∘b)·b⁻¹ = λ_a(b)·b⁻¹`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.dot.mul(self.lambda(a, b), self.dot.inv(b))
    }

    /// The dot-subgroup generated by `x*y` for `x ∈ xs`, `y ∈ ys`.
    pub fn star_subgroup(&self, xs: &ElemSet, ys: &ElemSet) -> ElemSet {
        let ys_v = ys.to_vec();
        let gens = ElemSet::from_elems(
            self.order,
            xs.iter()
                .flat_map(|x| ys_v.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.star(x, y)),
        );
        self.dot.generated_subgroup(&gens)
    }

    pub fn derived_series3(&self) -> DerivedSeries {
        let all = self.dot.full_set();
        let derived = self.star_subgroup(&all, &all);
        let left3 = self.star_subgroup(&all, &derived);
        let right3 = self.star_subgroup(&derived, &all);
        DerivedSeries {
            derived,
            left3,
            right3,
        }
    }

    /// Same circle, dot replaced by `a·ᵒᵖb = b·a`. The opposite of a brace
    /// is always a brace, so the tables are not re-validated.
    pub fn opposite(&self) -> Self {
        let label = match self.label.strip_suffix("^op") {
            Some(inner) => inner.to_string(),
            None => format!("{}^op", self.label),
        };
        let dot = self.dot.opposite().relabel(self.dot.label().strip_suffix("^op").map_or_else(
            || format!("{}^op", self.dot.label()),
            str::to_string,
        ));
        Self::assemble(dot, self.circle.clone(), label)
    }

    pub fn is_trivial(&self) -> bool {
        self.dot == self.circle || self.dot.table() == self.circle.table()
    }

    pub fn is_almost_trivial(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| self.circle.mul(a, b) == self.dot.mul(b, a)))
    }

    /// `(a·b)∘c = (a∘c)·c⁻¹·(b∘c)` for all triples.
    pub fn is_two_sided(&self) -> bool {
        self.two_sided_witness().is_none()
    }

    pub fn two_sided_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        let (dot, circle) = (&self.dot, &self.circle);
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = dot.mul(a, b);
                for c in 0..n {
                    let lhs = circle.mul(ab, c);
                    let rhs = dot.mul(dot.mul(circle.mul(a, c), dot.inv(c)), circle.mul(b, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// `A′ * A′ = 1`.
    pub fn is_meta_trivial(&self) -> bool {
        let derived = self.derived_series3().derived;
        self.star_subgroup(&derived, &derived).len() == 1
    }

    pub fn is_left_nilpotent3(&self) -> bool {
        self.derived_series3().left3.len() == 1
    }

    pub fn is_right_nilpotent3(&self) -> bool {
        self.derived_series3().right3.len() == 1
    }

    /// Whether `x*y = 1` for all `x, y ∈ s`.
    pub fn is_trivial_on(&self, s: &ElemSet) -> bool {
        self.star_witness(s, s).is_none()
    }

    /// `(x, y)` with `x*y ≠ 1`, `x ∈ xs`, `y ∈ ys`.
    pub fn star_witness(&self, xs: &ElemSet, ys: &ElemSet) -> Option<(usize, usize)> {
        let e = self.identity();
        let ys_v = ys.to_vec();
        xs.iter()
            .flat_map(|x| ys_v.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| self.star(x, y) != e)
    }

    pub fn is_sub_skew_brace(&self, s: &ElemSet) -> bool {
        self.dot.is_subgroup(s) && self.circle.is_subgroup(s)
    }

    /// `λ_a(x) ∈ s` for all `a` and `x ∈ s`; `s` must be a dot-subgroup.
    pub fn is_left_ideal(&self, s: &ElemSet) -> bool {
        self.dot.is_subgroup(s) && self.all_in(s, |a, x| self.lambda(a, x))
    }

    /// `x*a ∈ s` for all `a` and `x ∈ s`.
    pub fn is_right_ideal(&self, s: &ElemSet) -> bool {
        self.dot.is_subgroup(s) && self.all_in(s, |a, x| self.star(x, a))
    }

    /// Left ideal of the opposite brace: `λᵒᵖ_a(x) ∈ s`.
    pub fn is_left_ideal_op(&self, s: &ElemSet) -> bool {
        self.dot.is_subgroup(s) && self.all_in(s, |a, x| self.lambda_op(a, x))
    }

    /// Right ideal of the opposite brace: `a⁻¹·λᵒᵖ_x(a) ∈ s`.
    pub fn is_right_ideal_op(&self, s: &ElemSet) -> bool {
        self.dot.is_subgroup(s)
            && self.all_in(s, |a, x| self.dot.mul(self.dot.inv(a), self.lambda_op(x, a)))
    }

    /// Normal in both groups and `a·s = a∘s` for every `a`.
    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        self.is_sub_skew_brace(s)
            && self.dot.normality_witness(s).is_none()
            && self.circle.normality_witness(s).is_none()
            && (0..self.order).all(|a| {
                let single = ElemSet::singleton(self.order, a);
                self.dot.set_product(&single, s) == self.circle.set_product(&single, s)
            })
    }

    fn all_in(&self, s: &ElemSet, f: impl Fn(usize, usize) -> usize) -> bool {
        let elems = s.to_vec();
        (0..self.order).all(|a| elems.iter().all(|&x| s.contains(f(a, x))))
    }

    pub fn subset_status(&self, s: &ElemSet) -> SubsetStatus {
        if !self.dot.is_subgroup(s) {
            return SubsetStatus::default();
        }
        SubsetStatus {
            sub_skew_brace: self.is_sub_skew_brace(s),
            ideal: self.is_ideal(s),
            left_ideal: self.is_left_ideal(s),
            right_ideal: self.is_right_ideal(s),
            left_ideal_op: self.is_left_ideal_op(s),
            right_ideal_op: self.is_right_ideal_op(s),
        }
    }

    /// Whether `s` is normal in the dot group; `false` for non-subgroups.
    pub fn is_dot_normal(&self, s: &ElemSet) -> bool {
        self.dot.is_subgroup(s) && self.dot.normality_witness(s).is_none()
    }

    pub fn is_circle_normal(&self, s: &ElemSet) -> bool {
        self.circle.is_subgroup(s) && self.circle.normality_witness(s).is_none()
    }

    /// Product decompositions of the carrier by two sub-skew braces.
    pub fn factorization_check(&self, b: &ElemSet, c: &ElemSet) -> Result<Factorization> {
        for (name, s) in [("B", b), ("C", c)] {
            if !self.is_sub_skew_brace(s) {
                return Err(Error::Domain(format!("{name} = {s:?} is not a sub-skew brace")));
            }
        }
        Ok(self.factorization_unchecked(b, c))
    }

    pub(crate) fn factorization_unchecked(&self, b: &ElemSet, c: &ElemSet) -> Factorization {
        Factorization {
            dot_product: self.dot.set_product(b, c).is_full(),
            circle_product: self.circle.set_product(b, c).is_full(),
            exact: b.intersection(c).len() == 1,
        }
    }

    /// Whether `a∘b` and `a·b` lie in the same left coset of `s` for all
    /// pairs, i.e. the induced operations on `A/s` agree.
    pub fn quotient_is_trivial(&self, s: &ElemSet) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.dot.mul(a, b);
                s.contains(self.dot.mul(self.dot.inv(ab), self.circle.mul(a, b)))
            })
        })
    }

    pub fn analyze(&self, subsets: &[(String, ElemSet)]) -> AnalysisReport {
        let series = self.derived_series3();
        let meta = self.star_subgroup(&series.derived, &series.derived).len() == 1;
        AnalysisReport {
            label: self.label.clone(),
            order: self.order,
            is_trivial: self.is_trivial(),
            is_almost_trivial: self.is_almost_trivial(),
            is_two_sided: self.is_two_sided(),
            is_meta_trivial: meta,
            is_left_nilpotent3: series.left3.len() == 1,
            is_right_nilpotent3: series.right3.len() == 1,
            derived_size: series.derived.len(),
            left3_size: series.left3.len(),
            right3_size: series.right3.len(),
            ideal_facts: subsets
                .iter()
                .map(|(name, s)| SubsetFacts {
                    name: name.clone(),
                    size: s.len(),
                    status: self.subset_status(s),
                })
                .collect(),
            derived: series.derived,
            left3: series.left3,
            right3: series.right3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::permutation_rank;

    fn s3() -> GroupTable {
        GroupTable::symmetric(3).unwrap()
    }

    #[test]
    fn trivial_brace_on_cyclic() {
        let z9 = GroupTable::cyclic(9).unwrap();
        let br = SkewBrace::new(z9.clone(), z9.clone()).unwrap();
        assert_eq!(br, SkewBrace::trivial(&z9).with_label(br.label()));
        assert!((0..9).all(|a| (0..9).all(|b| br.star(a, b) == 0)));
        assert!(br.is_trivial() && br.is_meta_trivial() && br.is_left_nilpotent3() && br.is_right_nilpotent3());
        let ds = br.derived_series3();
        assert_eq!((ds.derived.len(), ds.left3.len(), ds.right3.len()), (1, 1, 1));
        assert_eq!(br.star_subgroup(&z9.full_set(), &z9.full_set()).len(), 1);
    }

    #[test]
    fn opposite_multiplication_gives_almost_trivial() {
        let g = s3();
        let br = SkewBrace::new(g.clone(), g.opposite()).unwrap();
        assert!(br.is_almost_trivial());
        assert!(!br.is_trivial());
        assert_eq!(br.dot(), SkewBrace::almost_trivial(&g).dot());
    }

    #[test]
    fn mismatched_identity_is_shape_error() {
        // Klein four relabelled so that its identity sits at index 1.
        let swap = |x: usize| match x {
            0 => 1,
            1 => 0,
            x => x,
        };
        let klein = GroupTable::from_fn(4, "V4'", |a, b| swap(swap(a) ^ swap(b))).unwrap();
        assert_eq!(klein.identity(), 1);
        let err = SkewBrace::new(GroupTable::cyclic(4).unwrap(), klein).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
    }

    #[test]
    fn relabelled_circle_is_rejected() {
        let dot = GroupTable::cyclic(4).unwrap();
        let swap = |x: usize| [0, 2, 1, 3][x];
        let circle = GroupTable::from_fn(4, "Z/4'", |a, b| swap((swap(a) + swap(b)) % 4)).unwrap();
        match SkewBrace::new(dot.clone(), circle.clone()) {
            Err(Error::BraceAxiom { a, b, c }) => {
                let lhs = circle.mul(a, dot.mul(b, c));
                let rhs = dot.mul(dot.mul(circle.mul(a, b), dot.inv(a)), circle.mul(a, c));
                assert_ne!(lhs, rhs);
            }
            other => panic!("expected brace axiom failure, got {other:?}"),
        }
        // (Z/4, +) with a∘b = a + b + 2ab is a genuine brace whose circle is V4
        let v4 = GroupTable::from_fn(4, "V4", |a, b| (a + b + 2 * a * b) % 4).unwrap();
        assert!(SkewBrace::new(dot, v4).is_ok());
    }

    #[test]
    fn star_on_almost_trivial_s3() {
        let g = s3();
        let br = SkewBrace::almost_trivial(&g);
        let a = permutation_rank(&[1, 0, 2]);
        let b = permutation_rank(&[1, 2, 0]);
        // oracle: compose permutations directly
        let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let inv = |p: [usize; 3]| {
            let mut r = [0; 3];
            for i in 0..3 {
                r[p[i]] = i;
            }
            r
        };
        let (pa, pb) = ([1, 0, 2], [1, 2, 0]);
        let want = compose(compose(compose(inv(pa), pb), pa), inv(pb));
        assert_eq!(br.star(a, b), permutation_rank(&want));
        for x in 0..6 {
            assert_eq!(br.star(x, g.identity()), g.identity());
        }
        let all = g.full_set();
        assert_eq!(br.star_subgroup(&all, &all), g.commutator_subgroup());
        assert_eq!(br.star_subgroup(&ElemSet::empty(6), &all).len(), 1);
        assert!(br.is_meta_trivial());
    }

    #[test]
    fn almost_trivial_on_abelian_is_trivial() {
        let g = GroupTable::elementary_abelian(2, 3).unwrap();
        let br = SkewBrace::almost_trivial(&g);
        assert!(br.is_trivial());
    }

    #[test]
    fn derived_series_of_groups() {
        for g in [
            s3(),
            GroupTable::dihedral(4).unwrap(),
            GroupTable::quaternion().unwrap(),
            GroupTable::symmetric(4).unwrap(),
        ] {
            let br = SkewBrace::almost_trivial(&g);
            let ds = br.derived_series3();
            let gg = g.commutator_subgroup();
            let ggg = g.commutator_of(&g.full_set(), &gg);
            assert_eq!(ds.derived, gg, "{}", g.label());
            assert_eq!(ds.left3, ggg, "{}", g.label());
            assert_eq!(ds.right3, ggg, "{}", g.label());
        }
    }

    #[test]
    fn opposite_is_an_involution() {
        let g = GroupTable::dihedral(4).unwrap();
        let br = SkewBrace::almost_trivial(&g);
        let op = br.opposite();
        assert!(op.is_trivial());
        let n = br.order();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(br.lambda_op(a, b), op.lambda(a, b));
            }
        }
        let back = op.opposite();
        assert_eq!(back.dot().table(), br.dot().table());
        assert_eq!(back.circle().table(), br.circle().table());
        assert_eq!(back.label(), br.label());

        let z6 = GroupTable::cyclic(6).unwrap();
        let t = SkewBrace::trivial(&z6);
        assert_eq!(t.opposite().dot().table(), t.dot().table());

        // a∘b = a + b + 2ab on Z/4
        let z4 = GroupTable::cyclic(4).unwrap();
        let circ = GroupTable::from_fn(4, "Z/4 twisted", |a, b| (a + b + 2 * a * b) % 4).unwrap();
        let tw = SkewBrace::new(z4, circ).unwrap();
        for br in [tw, SkewBrace::almost_trivial(&s3())] {
            let op = br.opposite();
            assert!(SkewBrace::new(op.dot().clone(), op.circle().clone()).is_ok());
        }
    }

    #[test]
    fn whole_carrier_has_every_status() {
        let br = SkewBrace::almost_trivial(&s3());
        let st = br.subset_status(&br.dot().full_set());
        assert_eq!(
            st,
            SubsetStatus {
                sub_skew_brace: true,
                ideal: true,
                left_ideal: true,
                right_ideal: true,
                left_ideal_op: true,
                right_ideal_op: true
            }
        );
        let not_subgroup = ElemSet::from_elems(6, [0, 1]);
        let t12 = permutation_rank(&[1, 0, 2]);
        assert_eq!(br.subset_status(&ElemSet::from_elems(6, [0, t12 + 2])), SubsetStatus::default());
        let _ = not_subgroup;
    }

    #[test]
    fn almost_trivial_ideals_are_normal_subgroups() {
        let g = s3();
        let br = SkewBrace::almost_trivial(&g);
        let t12 = permutation_rank(&[1, 0, 2]);
        let h = g.generated_subgroup(&ElemSet::singleton(6, t12));
        let a3 = g.commutator_subgroup();
        let sh = br.subset_status(&h);
        assert!(sh.sub_skew_brace && !sh.ideal && !sh.left_ideal && !sh.right_ideal);
        let sa = br.subset_status(&a3);
        assert!(sa.ideal && sa.left_ideal && sa.right_ideal);
    }

    #[test]
    fn factorization_examples() {
        let g = GroupTable::dihedral(4).unwrap();
        let br = SkewBrace::almost_trivial(&g);
        let f = br.factorization_check(&g.full_set(), &g.trivial_set()).unwrap();
        assert!(f.dot_product && f.circle_product && f.exact);
        let r = g.generated_subgroup(&ElemSet::singleton(8, 1));
        let f = br.factorization_check(&r, &r).unwrap();
        assert!(!f.dot_product && !f.circle_product && !f.exact);
        assert!(br.factorization_check(&ElemSet::from_elems(8, [0, 1]), &r).is_err());
    }

    #[test]
    fn derived_subgroup_has_trivial_quotient() {
        let g = GroupTable::symmetric(4).unwrap();
        let br = SkewBrace::almost_trivial(&g);
        let d = br.derived_series3().derived;
        assert!(br.is_ideal(&d));
        assert!(br.quotient_is_trivial(&d));
        assert!(!br.quotient_is_trivial(&g.trivial_set()));
    }

    #[test]
    fn two_sided_examples() {
        assert!(SkewBrace::trivial(&s3()).is_two_sided());
        assert!(SkewBrace::almost_trivial(&s3()).is_two_sided());
    }
}
