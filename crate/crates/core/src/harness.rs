//! Brute-force verification of brace identities and theorems on concrete
//! instances.
//!
//! Every statement is reported as a [`TheoremReport`]: hypotheses are checked
//! one by one and never assumed, and the conclusion is evaluated regardless
//! of whether the hypotheses hold. A report whose hypotheses all hold but
//! whose conclusion fails is a red alert.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bicrossed::{BicrossedData, BicrossedSpec};
use crate::brace::SkewBrace;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::families::{enumerate_quadruples, family1_data, family2_data, Family1Params, Family2Params};
use crate::group::{permutation_rank, GroupTable};

/// Largest order accepted by [`verify_lemma_suite`].
pub const LEMMA_SCAN_CAP: usize = 200;

pub type Witness = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    /// Holds exactly when no witness was found.
    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        Check {
            name: name.into(),
            holds: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub hypotheses: Vec<Check>,
    pub conclusion: Check,
    pub applicable: bool,
}

impl TheoremReport {
    pub fn new(id: impl Into<String>, hypotheses: Vec<Check>, conclusion: Check) -> Self {
        let applicable = hypotheses.iter().all(|h| h.holds);
        TheoremReport {
            id: id.into(),
            hypotheses,
            conclusion,
            applicable,
        }
    }

    /// All hypotheses hold and the conclusion fails.
    pub fn is_red_alert(&self) -> bool {
        self.applicable && !self.conclusion.holds
    }

    pub fn failed_hypotheses(&self) -> Vec<&str> {
        self.hypotheses
            .iter()
            .filter(|h| !h.holds)
            .map(|h| h.name.as_str())
            .collect()
    }
}

fn pair(w: Option<(usize, usize)>) -> Option<Witness> {
    w.map(|(a, b)| vec![a, b])
}

fn scan_triples<F>(n: usize, holds: F) -> Option<Witness>
where
    F: Fn(usize, usize, usize) -> bool + Sync,
{
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if !holds(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    })
}

/// `(x, y)` in `s` with `x·y⁻¹ ∉ s`, or `[e]` when `s` misses the identity.
fn subgroup_witness(g: &GroupTable, s: &ElemSet) -> Option<Witness> {
    if !s.contains(g.identity()) {
        return Some(vec![g.identity()]);
    }
    let elems = s.to_vec();
    elems.iter().find_map(|&x| {
        elems
            .iter()
            .find(|&&y| !s.contains(g.mul(x, g.inv(y))))
            .map(|&y| vec![x, y])
    })
}

/// The four one-sided ideal notions, for `A` and for `A^op`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    Left,
    Right,
    LeftOp,
    RightOp,
}

impl IdealKind {
    fn describe(self) -> &'static str {
        match self {
            IdealKind::Left => "left ideal in A",
            IdealKind::Right => "right ideal in A",
            IdealKind::LeftOp => "left ideal in A^op",
            IdealKind::RightOp => "right ideal in A^op",
        }
    }
}

/// `(a, x)` with `x ∈ s` whose image under the defining map leaves `s`.
pub fn ideal_witness(br: &SkewBrace, s: &ElemSet, kind: IdealKind) -> Option<Witness> {
    let dot = br.dot();
    if let Some(w) = subgroup_witness(dot, s) {
        return Some(w);
    }
    let image = |a: usize, x: usize| match kind {
        IdealKind::Left => br.lambda(a, x),
        IdealKind::Right => br.star(x, a),
        IdealKind::LeftOp => br.lambda_op(a, x),
        IdealKind::RightOp => dot.mul(dot.inv(a), br.lambda_op(x, a)),
    };
    let elems = s.to_vec();
    (0..br.order()).find_map(|a| {
        elems
            .iter()
            .find(|&&x| !s.contains(image(a, x)))
            .map(|&x| vec![a, x])
    })
}

fn missing_from(product: &ElemSet) -> Option<Witness> {
    (0..product.universe())
        .find(|&x| !product.contains(x))
        .map(|x| vec![x])
}

fn dot_factor_witness(br: &SkewBrace, b: &ElemSet, c: &ElemSet) -> Option<Witness> {
    missing_from(&br.dot().set_product(b, c))
}

fn circle_factor_witness(br: &SkewBrace, b: &ElemSet, c: &ElemSet) -> Option<Witness> {
    missing_from(&br.circle().set_product(b, c))
}

fn trivial_check(br: &SkewBrace, name: &str, s: &ElemSet) -> Check {
    Check::from_witness(format!("{name} trivial"), pair(br.star_witness(s, s)))
}

fn ideal_check(br: &SkewBrace, name: &str, s: &ElemSet, kind: IdealKind) -> Check {
    Check::from_witness(format!("{name} {}", kind.describe()), ideal_witness(br, s, kind))
}

fn require_sub_braces(br: &SkewBrace, b: &ElemSet, c: &ElemSet) -> Result<()> {
    br.factorization_check(b, c).map(|_| ())
}

/// The identity families of the lambda calculus for skew braces, over all
/// triples: two product rules for `*`, the conjugation rule, the
/// equivariance of `*` under `λ`, and, on two-sided braces, the product
/// rule in the first argument.
pub fn verify_lemma_suite(br: &SkewBrace) -> Result<Vec<TheoremReport>> {
    let n = br.order();
    if n > LEMMA_SCAN_CAP {
        return Err(Error::Capacity {
            order: n,
            cap: LEMMA_SCAN_CAP,
        });
    }
    let (dot, circle) = (br.dot(), br.circle());
    let mut reports = Vec::new();
    let mut identity = |id: &str, statement: &str, w: Option<Witness>| {
        reports.push(TheoremReport::new(id, Vec::new(), Check::from_witness(statement, w)));
    };

    identity(
        "formulas1.a",
        "a*(bc) = (a*b)·b·(a*c)·b⁻¹",
        scan_triples(n, |a, b, c| {
            let rhs = dot.mul(dot.mul(dot.mul(br.star(a, b), b), br.star(a, c)), dot.inv(b));
            br.star(a, dot.mul(b, c)) == rhs
        }),
    );
    identity(
        "formulas1.b",
        "(a∘b)*c = (a*(b*c))·(b*c)·(a*c)",
        scan_triples(n, |a, b, c| {
            let bc = br.star(b, c);
            let rhs = dot.mul(dot.mul(br.star(a, bc), bc), br.star(a, c));
            br.star(circle.mul(a, b), c) == rhs
        }),
    );
    identity(
        "conj",
        "a(b*c)a⁻¹ = (b*a)⁻¹(b*(ac))",
        scan_triples(n, |a, b, c| {
            let lhs = dot.conjugate(a, br.star(b, c));
            let rhs = dot.mul(dot.inv(br.star(b, a)), br.star(b, dot.mul(a, c)));
            lhs == rhs
        }),
    );
    identity(
        "formulas2",
        "λ_a(b*c) = (a∘b∘ā)*λ_a(c)",
        scan_triples(n, |a, b, c| {
            let conj = circle.mul(circle.mul(a, b), circle.inv(a));
            br.lambda(a, br.star(b, c)) == br.star(conj, br.lambda(a, c))
        }),
    );

    let two_sided = Check::from_witness(
        "two-sided",
        br.two_sided_witness().map(|(a, b, c)| vec![a, b, c]),
    );
    let conclusion = Check::from_witness(
        "(ab)*c = b⁻¹·(a*c)·b·(b*c)",
        scan_triples(n, |a, b, c| {
            let rhs = dot.mul(dot.conjugate(dot.inv(b), br.star(a, c)), br.star(b, c));
            br.star(dot.mul(a, b), c) == rhs
        }),
    );
    reports.push(TheoremReport::new("two-sided", vec![two_sided], conclusion));
    Ok(reports)
}

/// The generator reductions for `B*C = 1`, parts (a), (b), (c) under each
/// of the conditions (i), (ii), and the `X ⊆ Y` corollary.
pub fn verify_prop_gen(
    br: &SkewBrace,
    b_set: &ElemSet,
    c_set: &ElemSet,
    x_gens: &ElemSet,
    y_gens: &ElemSet,
) -> Result<Vec<TheoremReport>> {
    let dot = br.dot();
    for (name, gens, target) in [("X", x_gens, b_set), ("Y", y_gens, c_set)] {
        let span = dot.generated_subgroup(gens);
        if &span != target {
            let w = (0..br.order()).find(|&x| span.contains(x) != target.contains(x));
            return Err(Error::Domain(format!(
                "{name} = {gens:?} does not generate the given subgroup (differs at {})",
                w.unwrap_or(usize::MAX)
            )));
        }
    }
    let conclusion = || Check::from_witness("B*C = 1", pair(br.star_witness(b_set, c_set)));
    let xs = x_gens.to_vec();
    let closed = |map: &dyn Fn(usize, usize) -> usize| {
        xs.iter().find_map(|&x| {
            let xbar = br.circle_inv(x);
            xs.iter()
                .find(|&&x2| !x_gens.contains(map(xbar, x2)))
                .map(|&x2| vec![x, x2])
        })
    };
    let cond_i = Check::from_witness("λ_x̄(X) ⊆ X", closed(&|a, b| br.lambda(a, b)));
    let cond_ii = Check::from_witness("λ^op_x̄(X) ⊆ X", closed(&|a, b| br.lambda_op(a, b)));
    let b_y = Check::from_witness("b*y = 1 for b ∈ B, y ∈ Y", pair(br.star_witness(b_set, y_gens)));
    let x_c = Check::from_witness("x*c = 1 for x ∈ X, c ∈ C", pair(br.star_witness(x_gens, c_set)));
    let x_y = Check::from_witness("x*y = 1 for x ∈ X, y ∈ Y", pair(br.star_witness(x_gens, y_gens)));
    let x_in_y = Check::from_witness(
        "X ⊆ Y",
        x_gens.iter().find(|&x| !y_gens.contains(x)).map(|x| vec![x]),
    );
    Ok(vec![
        TheoremReport::new("prop:gen.a", vec![b_y], conclusion()),
        TheoremReport::new("prop:gen.b(i)", vec![cond_i.clone(), x_c.clone()], conclusion()),
        TheoremReport::new("prop:gen.b(ii)", vec![cond_ii.clone(), x_c], conclusion()),
        TheoremReport::new("prop:gen.c(i)", vec![cond_i, x_y.clone()], conclusion()),
        TheoremReport::new("prop:gen.c(ii)", vec![cond_ii, x_y.clone()], conclusion()),
        TheoremReport::new("cor:gen", vec![x_in_y, x_y], conclusion()),
    ])
}

/// One factorization together with a one-sided ideal condition on `B`
/// yields the other factorization.
pub fn verify_lemma_product(br: &SkewBrace, b_set: &ElemSet, c_set: &ElemSet) -> Result<Vec<TheoremReport>> {
    require_sub_braces(br, b_set, c_set)?;
    let dot_fact = || Check::from_witness("A = B·C", dot_factor_witness(br, b_set, c_set));
    let circ_fact = || Check::from_witness("A = B∘C", circle_factor_witness(br, b_set, c_set));
    let ideal = |kind| ideal_check(br, "B", b_set, kind);
    Ok(vec![
        TheoremReport::new("lem:product.a", vec![dot_fact(), ideal(IdealKind::Left)], circ_fact()),
        TheoremReport::new("lem:product.a^op", vec![dot_fact(), ideal(IdealKind::LeftOp)], circ_fact()),
        TheoremReport::new("lem:product.b", vec![circ_fact(), ideal(IdealKind::Right)], dot_fact()),
        TheoremReport::new("lem:product.b^op", vec![circ_fact(), ideal(IdealKind::RightOp)], dot_fact()),
    ])
}

/// Normality and left-ideal status of `B*C`, and `A′ = (B*C)·(C*B)`.
pub fn verify_section3(br: &SkewBrace, b_set: &ElemSet, c_set: &ElemSet) -> Result<Vec<TheoremReport>> {
    require_sub_braces(br, b_set, c_set)?;
    let dot = br.dot();
    let bc = br.star_subgroup(b_set, c_set);
    let cb = br.star_subgroup(c_set, b_set);
    let dot_fact = || Check::from_witness("A = B·C", dot_factor_witness(br, b_set, c_set));
    let bc_left = || ideal_check(br, "B*C", &bc, IdealKind::Left);

    let normal = TheoremReport::new(
        "lem:normal",
        vec![dot_fact(), trivial_check(br, "B", b_set)],
        Check::from_witness("B*C normal in (A,·)", pair(dot.normality_witness(&bc))),
    );
    let inv_a = TheoremReport::new(
        "lem:invariant.a",
        vec![
            dot_fact(),
            trivial_check(br, "C", c_set),
            ideal_check(br, "C", c_set, IdealKind::Left),
        ],
        bc_left(),
    );
    let inv_b = TheoremReport::new(
        "lem:invariant.b",
        vec![
            dot_fact(),
            trivial_check(br, "B", b_set),
            Check::from_witness("B normal in (A,∘)", pair(br.circle().normality_witness(b_set))),
        ],
        bc_left(),
    );
    let derived = br.derived_series3().derived;
    let product = dot.set_product(&bc, &cb);
    let a_prime = TheoremReport::new(
        "prop:A'",
        vec![
            dot_fact(),
            Check::from_witness("A = B∘C", circle_factor_witness(br, b_set, c_set)),
            trivial_check(br, "B", b_set),
            trivial_check(br, "C", c_set),
        ],
        Check::from_witness(
            "A′ = (B*C)·(C*B)",
            (0..br.order())
                .find(|&x| derived.contains(x) != product.contains(x))
                .map(|x| vec![x]),
        ),
    );
    Ok(vec![normal, inv_a, inv_b, a_prime])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Left,
    Right,
    Ito,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::Left, Theorem::Right, Theorem::Ito];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Left => "thm:left",
            Theorem::Right => "thm:right",
            Theorem::Ito => "thm:ito",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Theorem::Left),
            "right" => Ok(Theorem::Right),
            "ito" => Ok(Theorem::Ito),
            other => Err(Error::Parse(format!("unknown theorem {other:?}; expected left, right or ito"))),
        }
    }
}

/// Hypotheses and conclusion of one of the three factorization theorems.
pub fn verify_theorem(br: &SkewBrace, which: Theorem, b_set: &ElemSet, c_set: &ElemSet) -> Result<TheoremReport> {
    require_sub_braces(br, b_set, c_set)?;
    let mut hyps = vec![trivial_check(br, "B", b_set), trivial_check(br, "C", c_set)];
    let all = br.dot().full_set();
    let derived = br.derived_series3().derived;
    let conclusion = match which {
        Theorem::Left => {
            for (name, s) in [("B", b_set), ("C", c_set)] {
                hyps.push(Check::from_witness(
                    format!("{name} normal in (A,∘)"),
                    pair(br.circle().normality_witness(s)),
                ));
            }
            hyps.push(ideal_check(br, "B", b_set, IdealKind::Right));
            hyps.push(ideal_check(br, "C", c_set, IdealKind::Right));
            hyps.push(Check::from_witness("A = B∘C", circle_factor_witness(br, b_set, c_set)));
            Check::from_witness("A³ = 1", pair(br.star_witness(&all, &derived)))
        }
        Theorem::Right => {
            for (name, s) in [("B", b_set), ("C", c_set)] {
                hyps.push(Check::from_witness(
                    format!("{name} normal in (A,·)"),
                    pair(br.dot().normality_witness(s)),
                ));
            }
            hyps.push(ideal_check(br, "B", b_set, IdealKind::Left));
            hyps.push(ideal_check(br, "C", c_set, IdealKind::Left));
            hyps.push(Check::from_witness("A = B·C", dot_factor_witness(br, b_set, c_set)));
            Check::from_witness("A⁽³⁾ = 1", pair(br.star_witness(&derived, &all)))
        }
        Theorem::Ito => {
            for (name, s) in [("B", b_set), ("C", c_set)] {
                hyps.push(ideal_check(br, name, s, IdealKind::LeftOp));
                hyps.push(ideal_check(br, name, s, IdealKind::RightOp));
            }
            let dot_w = dot_factor_witness(br, b_set, c_set);
            let circ_w = circle_factor_witness(br, b_set, c_set);
            let either = match (dot_w, circ_w) {
                (Some(mut d), Some(c)) => {
                    d.extend(c);
                    Some(d)
                }
                _ => None,
            };
            hyps.push(Check::from_witness("A = B·C or A = B∘C", either));
            Check::from_witness("A′*A′ = 1", pair(br.star_witness(&derived, &derived)))
        }
    };
    Ok(TheoremReport::new(which.id(), hyps, conclusion))
}

fn abelian_subgroup_check(g: &GroupTable, name: &str, s: &ElemSet) -> Check {
    let w = subgroup_witness(g, s).or_else(|| {
        let elems = s.to_vec();
        elems.iter().find_map(|&x| {
            elems
                .iter()
                .find(|&&y| g.mul(x, y) != g.mul(y, x))
                .map(|&y| vec![x, y])
        })
    });
    Check::from_witness(format!("{name} abelian subgroup"), w)
}

/// The group statements: `G = HK` with `H`, `K` abelian makes `[G,G]`
/// abelian, and with `H`, `K` also normal gives `[[G,G],G] = 1`.
pub fn verify_group_ito(g: &GroupTable, h: &ElemSet, k: &ElemSet) -> Vec<TheoremReport> {
    let base = vec![
        abelian_subgroup_check(g, "H", h),
        abelian_subgroup_check(g, "K", k),
        Check::from_witness("G = HK", missing_from(&g.set_product(h, k))),
    ];
    let derived = g.commutator_subgroup();
    let all = g.full_set();
    let metabelian = TheoremReport::new(
        "prop:metabelian",
        base.clone(),
        abelian_subgroup_check(g, "[G,G]", &derived),
    );
    let mut class2_hyps = base;
    for (name, s) in [("H", h), ("K", k)] {
        let w = if g.is_subgroup(s) {
            pair(g.normality_witness(s))
        } else {
            subgroup_witness(g, s)
        };
        class2_hyps.push(Check::from_witness(format!("{name} normal"), w));
    }
    let e = g.identity();
    let class2_w = derived.iter().find_map(|x| {
        all.iter()
            .find(|&y| g.commutator(x, y) != e)
            .map(|y| vec![x, y])
    });
    let class2 = TheoremReport::new(
        "prop:class2",
        class2_hyps,
        Check::from_witness("[[G,G],G] = 1", class2_w),
    );
    vec![metabelian, class2]
}

/// Ideal-status predictions and the meta-triviality criterion against the
/// built brace.
pub fn verify_bicrossed(data: &BicrossedData, br: &SkewBrace) -> Vec<TheoremReport> {
    let profile = data.ideal_profile();
    let mut reports = Vec::new();
    let kinds = [IdealKind::Left, IdealKind::Right, IdealKind::LeftOp, IdealKind::RightOp];
    for (name, set, pred) in [
        ("B×1", data.b_factor(), profile.b_factor),
        ("1×C", data.c_factor(), profile.c_factor),
    ] {
        let predicted = [pred.left_ideal, pred.right_ideal, pred.left_ideal_op, pred.right_ideal_op];
        for (kind, want) in kinds.into_iter().zip(predicted) {
            let actual = ideal_witness(br, &set, kind);
            let id = match kind {
                IdealKind::Left => "prop:ideal left",
                IdealKind::Right => "prop:ideal right",
                IdealKind::LeftOp => "prop:ideal-op left",
                IdealKind::RightOp => "prop:ideal-op right",
            };
            let w = match (want, actual) {
                (true, Some(w)) => Some(w),
                (false, None) => Some(Vec::new()),
                _ => None,
            };
            reports.push(TheoremReport::new(
                format!("{id} {name}"),
                Vec::new(),
                Check::from_witness(format!("{name} {} iff predicted ({want})", kind.describe()), w),
            ));
        }
    }
    let brute = br.is_meta_trivial();
    let crit = data.criterion_witness();
    reports.push(TheoremReport::new(
        "prop:criterion",
        Vec::new(),
        Check::from_witness(
            "criterion ⟺ meta-trivial",
            match (brute, crit) {
                (true, Some((b1, c1, b2, c2))) => Some(vec![b1, c1, b2, c2]),
                (false, None) => Some(Vec::new()),
                _ => None,
            },
        ),
    ));
    let phi_or_psi = Check::from_witness(
        "φ or ψ trivial",
        (!(data.phi_is_trivial() || data.psi_is_trivial())).then(Vec::new),
    );
    reports.push(TheoremReport::new(
        "cor:metatrivial",
        vec![phi_or_psi],
        Check::from_witness("meta-trivial", (!brute).then(Vec::new)),
    ));
    reports
}

/// Structural facts every brace satisfies: the opposite is an involution,
/// `λ` and `λ^op` are homomorphisms into `Aut(A,·)`, and `A′` is an ideal
/// with trivial quotient.
pub fn verify_structure(br: &SkewBrace) -> Result<Vec<TheoremReport>> {
    let n = br.order();
    let (dot, circle) = (br.dot(), br.circle());
    let twice = br.opposite().opposite();
    let involution = if &twice == br {
        None
    } else {
        (0..n * n)
            .find(|&i| twice.dot().mul(i / n, i % n) != dot.mul(i / n, i % n))
            .map(|i| vec![i / n, i % n])
            .or(Some(Vec::new()))
    };
    let lambda_hom = scan_triples(n, |a, b, c| br.lambda(circle.mul(a, b), c) == br.lambda(a, br.lambda(b, c)));
    let lambda_aut = scan_triples(n, |a, b, c| br.lambda(a, dot.mul(b, c)) == dot.mul(br.lambda(a, b), br.lambda(a, c)));
    let lambda_op_hom =
        scan_triples(n, |a, b, c| br.lambda_op(circle.mul(a, b), c) == br.lambda_op(a, br.lambda_op(b, c)));
    let derived = br.derived_series3().derived;
    let ideal = (!br.is_ideal(&derived)).then(|| derived.to_vec());
    let quotient = scan_pairs_quotient(br, &derived);
    let fact = |id: &str, statement: &str, w| TheoremReport::new(id, Vec::new(), Check::from_witness(statement, w));
    Ok(vec![
        fact("opposite-involution", "(A^op)^op = A", involution),
        fact("lambda-hom", "λ_{a∘b} = λ_a λ_b", lambda_hom),
        fact("lambda-aut", "λ_a(bc) = λ_a(b)λ_a(c)", lambda_aut),
        fact("lambda-op-hom", "λ^op_{a∘b} = λ^op_a λ^op_b", lambda_op_hom),
        fact("derived-ideal", "A′ is an ideal", ideal),
        fact("derived-quotient", "a·b and a∘b agree modulo A′", quotient),
    ])
}

fn scan_pairs_quotient(br: &SkewBrace, s: &ElemSet) -> Option<Witness> {
    let dot = br.dot();
    (0..br.order()).find_map(|a| {
        (0..br.order())
            .find(|&b| !s.contains(dot.mul(dot.inv(dot.mul(a, b)), br.circle().mul(a, b))))
            .map(|b| vec![a, b])
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    Trivial,
    AlmostTrivial,
    Bicrossed,
}

/// One corpus brace with a distinguished pair of sub-skew braces.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: EntryKind,
    pub brace: SkewBrace,
    pub b_set: ElemSet,
    pub c_set: ElemSet,
    pub data: Option<BicrossedData>,
}

impl CorpusEntry {
    fn from_data(name: String, data: BicrossedData) -> Result<Self> {
        let brace = data.build()?.with_label(name.clone());
        Ok(CorpusEntry {
            name,
            kind: EntryKind::Bicrossed,
            b_set: data.b_factor(),
            c_set: data.c_factor(),
            brace,
            data: Some(data),
        })
    }
}

/// Small groups with a factorization `G = HK` into abelian subgroups.
pub fn factored_groups() -> Result<Vec<(GroupTable, ElemSet, ElemSet)>> {
    let gen = |g: &GroupTable, x: usize| g.generated_subgroup(&ElemSet::singleton(g.order(), x));
    let z9 = GroupTable::cyclic(9)?;
    let s3 = GroupTable::symmetric(3)?;
    let d4 = GroupTable::dihedral(4)?;
    let q8 = GroupTable::quaternion()?;
    let rot = permutation_rank(&[1, 2, 0]);
    let swap = permutation_rank(&[1, 0, 2]);
    Ok(vec![
        (z9.clone(), z9.full_set(), z9.trivial_set()),
        (s3.clone(), gen(&s3, rot), gen(&s3, swap)),
        (d4.clone(), gen(&d4, 1), gen(&d4, 4)),
        (q8.clone(), gen(&q8, 1), gen(&q8, 4)),
    ])
}

/// Bicrossed instances outside the two families.
pub fn extra_bicrossed() -> Result<Vec<(String, BicrossedData)>> {
    let s3 = GroupTable::symmetric(3)?;
    let perms = crate::group::permutations(3);
    let sign = |b: usize| {
        let p = &perms[b];
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        inversions % 2
    };
    let z3 = GroupTable::cyclic(3)?;
    let sign_action = BicrossedSpec::from_fns(s3.clone(), z3, |_, x| x, |b, y| if sign(b) == 1 { (3 - y) % 3 } else { y })
        .certify()?;
    let t = permutation_rank(&[1, 0, 2]);
    let conj = BicrossedSpec::from_fns(
        s3.clone(),
        GroupTable::cyclic(2)?,
        |c, x| if c == 1 { s3.conjugate(t, x) } else { x },
        |_, y| y,
    )
    .certify()?;
    let z7_by_z3 = BicrossedSpec::cyclic(7, 3, 2, 1)?.certify()?;
    Ok(vec![
        ("S3 x Z/3 (psi = sign)".into(), sign_action),
        ("S3 x Z/2 (phi = conj by (12))".into(), conj),
        ("Z/7 x Z/3 (phi = 2^c)".into(), z7_by_z3),
    ])
}

pub fn family1_name(p: &Family1Params) -> String {
    format!("family1(p={}, m={}, n={}, k={}, l={})", p.p, p.m, p.n, p.k, p.l)
}

pub fn family2_name(index: usize, p: &Family2Params) -> String {
    format!("family2 example ({index}) (p={}, m={})", p.p, p.m())
}

/// Family-1 parameters in the corpus: the seven nontrivial quadruples of
/// bound 3, for `p = 3` and `p = 5`.
pub fn family1_corpus_params() -> Vec<Family1Params> {
    let mut out = Vec::new();
    for p in [3, 5] {
        for (m, n, k, l) in enumerate_quadruples(3, true) {
            out.push(Family1Params { p, m, n, k, l });
        }
    }
    out
}

/// The fixed corpus: trivial and almost-trivial braces on `Z/9`, `S₃`,
/// `D₄`, `Q₈`; every Family-1 corpus instance whose brace has order at most
/// `build_limit`; the buildable listed Family-2 examples; and the extra
/// bicrossed instances.
pub fn corpus(build_limit: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (g, h, k) in factored_groups()? {
        out.push(CorpusEntry {
            name: format!("trivial({})", g.label()),
            kind: EntryKind::Trivial,
            brace: SkewBrace::trivial(&g),
            b_set: h.clone(),
            c_set: k.clone(),
            data: None,
        });
        out.push(CorpusEntry {
            name: format!("almost-trivial({})", g.label()),
            kind: EntryKind::AlmostTrivial,
            brace: SkewBrace::almost_trivial(&g),
            b_set: h,
            c_set: k,
            data: None,
        });
    }
    for params in family1_corpus_params() {
        let order = params.b_order()?.saturating_mul(params.c_order()?);
        if order as usize <= build_limit {
            out.push(CorpusEntry::from_data(family1_name(&params), family1_data(&params)?)?);
        }
    }
    for index in 1..=6 {
        let Ok(params) = Family2Params::example(index) else {
            continue;
        };
        if params.brace_order().is_some_and(|o| o as usize <= build_limit) {
            out.push(CorpusEntry::from_data(family2_name(index, &params), family2_data(&params)?)?);
        }
    }
    for (name, data) in extra_bicrossed()? {
        out.push(CorpusEntry::from_data(name, data)?);
    }
    Ok(out)
}

/// Greedy generating set of a subgroup, in increasing element order.
pub fn greedy_generators(g: &GroupTable, s: &ElemSet) -> ElemSet {
    g.generators_of(s)
}

/// Every applicable suite on one corpus entry.
pub fn verify_entry(entry: &CorpusEntry, lemma_limit: usize) -> Result<Vec<TheoremReport>> {
    let br = &entry.brace;
    let (b, c) = (&entry.b_set, &entry.c_set);
    let mut reports = Vec::new();
    if br.order() <= lemma_limit.min(LEMMA_SCAN_CAP) {
        reports.extend(verify_lemma_suite(br)?);
    }
    let (x, y) = (greedy_generators(br.dot(), b), greedy_generators(br.dot(), c));
    reports.extend(verify_prop_gen(br, b, c, &x, &y)?);
    reports.extend(verify_lemma_product(br, b, c)?);
    reports.extend(verify_section3(br, b, c)?);
    for which in Theorem::ALL {
        reports.push(verify_theorem(br, which, b, c)?);
    }
    if entry.kind == EntryKind::AlmostTrivial {
        reports.extend(verify_group_ito(br.dot(), b, c));
    }
    if let Some(data) = &entry.data {
        reports.extend(verify_bicrossed(data, br));
        reports.extend(verify_structure(br)?);
    }
    Ok(reports)
}
