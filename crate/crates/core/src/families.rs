//! Two explicit families of bicrossed braces.
//!
//! The first family lives on `Z/p^m × Z/p^n` with both actions given by
//! scalar multiplication; the second on `(Z/2)^m × (Z/p)^n` with `φ` acting
//! through powers of a matrix `P ∈ GL_m(Z/2)` of order `p` and `ψ` through a
//! diagonal sign matrix `E`.

use serde::{Deserialize, Serialize};

use crate::bicrossed::{pow_mod, BicrossedData, BicrossedSpec};
use crate::error::{Error, Result};
use crate::group::{carrier_cap, GroupTable};
use crate::matrix::{gl2_order, is_prime, MatrixModM};

pub use crate::matrix::cri_hypothesis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family1Params {
    pub p: u64,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub l: u32,
}

/// Which of the three quadruple inequalities a parameter set breaks.
fn quadruple_violation(m: u32, n: u32, k: u32, l: u32) -> Option<&'static str> {
    if k > m.min(n) {
        Some("k ≤ min(m, n)")
    } else if l > m.min(n) {
        Some("ℓ ≤ min(m, n)")
    } else if k + l > n {
        Some("k ≤ n−ℓ")
    } else {
        None
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::Parameter(format!("p = {p} is not an odd prime")));
    }
    Ok(())
}

impl Family1Params {
    pub fn new(p: u64, m: u32, n: u32, k: u32, l: u32) -> Result<Self> {
        require_odd_prime(p)?;
        if [m, n, k, l].contains(&0) {
            return Err(Error::Parameter("m, n, k, ℓ must be positive".into()));
        }
        if let Some(ineq) = quadruple_violation(m, n, k, l) {
            return Err(Error::Parameter(format!(
                "(m, n, k, ℓ) = ({m}, {n}, {k}, {l}) violates {ineq}"
            )));
        }
        Ok(Family1Params { p, m, n, k, l })
    }

    /// `|B| = p^m`
    pub fn b_order(&self) -> Result<u64> {
        self.p
            .checked_pow(self.m)
            .ok_or_else(|| Error::Parameter(format!("{}^{} overflows", self.p, self.m)))
    }

    /// `|C| = p^n`
    pub fn c_order(&self) -> Result<u64> {
        self.p
            .checked_pow(self.n)
            .ok_or_else(|| Error::Parameter(format!("{}^{} overflows", self.p, self.n)))
    }

    /// `1 + p^(m−k)`, the multiplier of `φ_1` on `Z/p^m`.
    pub fn phi_multiplier(&self) -> u64 {
        1 + self.p.pow(self.m - self.k)
    }

    /// `1 + p^(n−ℓ)`, the multiplier of `ψ_1` on `Z/p^n`.
    pub fn psi_multiplier(&self) -> u64 {
        1 + self.p.pow(self.n - self.l)
    }

    /// `k ≤ m−1` and `ℓ ≤ n−1`.
    pub fn is_nontrivial(&self) -> bool {
        self.k < self.m && self.l < self.n
    }
}

/// Certified data for the first family.
///
/// The maps are taken literally: `φ_c(x) = (1+p^(m−k))^c x`. When `k = m`
/// (or `ℓ = n`) the multiplier is 2, which has order prime to `p`, so `φ`
/// (or `ψ`) is not a homomorphism out of a `p`-group and certification fails.
pub fn family1_data(params: &Family1Params) -> Result<BicrossedData> {
    let params = Family1Params::new(params.p, params.m, params.n, params.k, params.l)?;
    let (q, r) = (params.b_order()?, params.c_order()?);
    let cap = carrier_cap() as u64;
    if q > cap || r > cap {
        return Err(Error::Capacity {
            order: q.max(r) as usize,
            cap: cap as usize,
        });
    }
    BicrossedSpec::cyclic(q as usize, r as usize, params.phi_multiplier(), params.psi_multiplier())?
        .certify()
}

/// Meta-triviality of a first-family brace through scalar arithmetic alone:
/// `((1+p^(n−ℓ))^u − 1)·w ≡ 0 (mod p^n)` for every
/// `u = ((1+p^(m−k))^c₁ − 1)·b₁ mod p^m` and `w = ((1+p^(n−ℓ))^b₂ − 1)·c₂ mod p^n`.
pub fn family1_shortcut_meta_trivial(params: &Family1Params) -> Result<bool> {
    let (q, r) = (params.b_order()?, params.c_order()?);
    let (mphi, mpsi) = (params.phi_multiplier(), params.psi_multiplier());
    let mut us: Vec<u64> = Vec::new();
    for c1 in 0..r {
        let f = (pow_mod(mphi, c1, q) + q - 1) % q;
        us.extend((0..q).map(|b1| mul_mod(f, b1, q)));
    }
    us.sort_unstable();
    us.dedup();
    let mut ws: Vec<u64> = Vec::new();
    for b2 in 0..q {
        let g = (pow_mod(mpsi, b2, r) + r - 1) % r;
        ws.extend((0..r).map(|c2| mul_mod(g, c2, r)));
    }
    ws.sort_unstable();
    ws.dedup();
    Ok(us.iter().all(|&u| {
        let h = (pow_mod(mpsi, u, r) + r - 1) % r;
        ws.iter().all(|&w| mul_mod(h, w, r) == 0)
    }))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

/// Least `e ≥ 1` with `a^e ≡ 1 (mod modulus)`, if `a` is a unit.
pub fn multiplicative_order(a: u64, modulus: u64) -> Option<u64> {
    if modulus < 2 {
        return Some(1);
    }
    let a = a % modulus;
    let mut x = a;
    for e in 1..=modulus {
        if x == 1 {
            return Some(e);
        }
        x = mul_mod(x, a, modulus);
    }
    None
}

/// Every `(m, n, k, ℓ) ∈ [1, max]⁴` satisfying the three inequalities, and
/// when `require_nontrivial`, also `k ≤ m−1`, `ℓ ≤ n−1`. Lexicographic order.
pub fn enumerate_quadruples(max: u32, require_nontrivial: bool) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            for k in 1..=max {
                for l in 1..=max {
                    if quadruple_violation(m, n, k, l).is_some() {
                        continue;
                    }
                    if require_nontrivial && (k >= m || l >= n) {
                        continue;
                    }
                    out.push((m, n, k, l));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family2Params {
    pub p: u64,
    /// `m × m` over Z/2 of order `p`.
    pub matrix: MatrixModM,
    pub n: usize,
    /// Diagonal of `E`: `+1` first, some later entry `−1`.
    pub eps: Vec<i8>,
}

/// The six `(p, P)` pairs listed with the second family, as binary rows.
pub const FAMILY2_EXAMPLES: [(u64, &str); 6] = [
    (3, "01;11"),
    (3, "001;100;010"),
    (7, "001;110;010"),
    (3, "0111;1101;0010;0100"),
    (5, "0100;1111;1101;1100"),
    (7, "0001;1010;0110;0010"),
];

impl Family2Params {
    pub fn new(p: u64, matrix: MatrixModM, n: usize, eps: Vec<i8>) -> Result<Self> {
        let params = Family2Params { p, matrix, n, eps };
        params.check()?;
        Ok(params)
    }

    /// Listed example `index` (1-based) with `n = 2`, `eps = (+1, −1)`.
    pub fn example(index: usize) -> Result<Self> {
        let (p, rows) = FAMILY2_EXAMPLES
            .get(index.wrapping_sub(1))
            .ok_or_else(|| Error::Parameter(format!("no example {index}; expected 1..=6")))?;
        Self::new(*p, MatrixModM::parse_binary_rows(rows)?, 2, vec![1, -1])
    }

    pub fn m(&self) -> usize {
        self.matrix.rows()
    }

    pub fn brace_order(&self) -> Option<u64> {
        2u64.checked_pow(self.m() as u32)?
            .checked_mul(self.p.checked_pow(self.n as u32)?)
    }

    fn check(&self) -> Result<()> {
        require_odd_prime(self.p)?;
        let mat = &self.matrix;
        if mat.modulus() != 2 || !mat.is_square() {
            return Err(Error::Parameter("P must be a square matrix mod 2".into()));
        }
        let m = mat.rows();
        match gl2_order(m as u32) {
            Some(g) if g % u128::from(self.p) == 0 => {}
            Some(g) => {
                return Err(Error::Parameter(format!(
                    "p = {} does not divide |GL_{m}(Z/2)| = {g}",
                    self.p
                )))
            }
            None => return Err(Error::Parameter(format!("m = {m} is too large"))),
        }
        if mat.is_identity() || !mat.pow(self.p)?.is_identity() {
            return Err(Error::Parameter(format!("P = {mat:?} does not have order {}", self.p)));
        }
        if self.n < 2 {
            return Err(Error::Parameter(format!("n = {} but n ≥ 2 is required", self.n)));
        }
        if self.eps.len() != self.n {
            return Err(Error::Parameter(format!(
                "eps has {} entries, expected n = {}",
                self.eps.len(),
                self.n
            )));
        }
        if self.eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::Parameter("eps entries must be ±1".into()));
        }
        if self.eps[0] != 1 {
            return Err(Error::Parameter("the first diagonal entry of E must be +1".into()));
        }
        if self.eps.iter().all(|&e| e == 1) {
            return Err(Error::Parameter("E is the identity; some eps_i must be −1".into()));
        }
        Ok(())
    }

    /// `E = diag(eps)` over Z/p.
    pub fn e_matrix(&self) -> Result<MatrixModM> {
        let diag: Vec<i64> = self.eps.iter().map(|&e| i64::from(e)).collect();
        MatrixModM::diagonal(&diag, self.p)
    }
}

/// Base-`q` digits of `index`, most significant first.
pub fn digits(mut index: usize, q: usize, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for slot in out.iter_mut().rev() {
        *slot = (index % q) as u64;
        index /= q;
    }
    out
}

pub fn from_digits(ds: &[u64], q: usize) -> usize {
    ds.iter().fold(0, |acc, &d| acc * q + d as usize)
}

/// Certified data for the second family on `(Z/2)^m × (Z/p)^n`.
pub fn family2_data(params: &Family2Params) -> Result<BicrossedData> {
    params.check()?;
    let (m, n, p) = (params.m(), params.n, params.p as usize);
    let b_group = GroupTable::elementary_abelian(2, m)?;
    let c_group = GroupTable::elementary_abelian(p, n)?;
    let powers: Vec<MatrixModM> = (0..params.p)
        .map(|v| params.matrix.pow(v))
        .collect::<Result<_>>()?;
    let e = params.e_matrix()?;
    let phi = |c: usize, x: usize| {
        let v1 = digits(c, p, n)[0] as usize;
        from_digits(&powers[v1].apply(&digits(x, 2, m)), 2)
    };
    let psi = |b: usize, y: usize| {
        let ys = digits(y, p, n);
        if digits(b, 2, m)[0] == 0 {
            y
        } else {
            from_digits(&e.apply(&ys), p)
        }
    };
    BicrossedSpec::from_fns(b_group, c_group, phi, psi).certify()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family1_smallest_nontrivial() {
        let params = Family1Params::new(3, 2, 2, 1, 1).unwrap();
        assert_eq!(params.phi_multiplier(), 4);
        let data = family1_data(&params).unwrap();
        assert_eq!((data.b_group().order(), data.c_group().order()), (9, 9));
        for c in 0..9 {
            for x in 0..9 {
                let want = (0..c).fold(1u64, |acc, _| acc * 4 % 9) * x as u64 % 9;
                assert_eq!(data.phi(c, x) as u64, want);
            }
        }
    }

    #[test]
    fn family1_constraint_errors() {
        let err = Family1Params::new(3, 1, 1, 1, 1).unwrap_err();
        assert!(err.to_string().contains("k ≤ n−ℓ"), "{err}");
        assert!(Family1Params::new(4, 2, 2, 1, 1).is_err());
        assert!(Family1Params::new(3, 2, 2, 3, 1).unwrap_err().to_string().contains("k ≤ min"));
    }

    #[test]
    fn family1_with_k_equal_m_fails_certification() {
        // multiplier 1 + p^0 = 2 is not of p-power order
        let params = Family1Params::new(3, 1, 2, 1, 1).unwrap();
        assert!(!params.is_nontrivial());
        assert!(matches!(family1_data(&params), Err(Error::MapLaw { .. })));
    }

    #[test]
    fn multiplier_orders() {
        for p in [3u64, 5] {
            for m in 1..=3u32 {
                for k in 1..m {
                    let q = p.pow(m);
                    assert_eq!(multiplicative_order(1 + p.pow(m - k), q), Some(p.pow(k)));
                }
            }
        }
    }

    #[test]
    fn quadruple_lists() {
        let seven = enumerate_quadruples(3, true);
        assert_eq!(
            seven,
            vec![(2, 2, 1, 1), (2, 3, 1, 1), (2, 3, 1, 2), (3, 2, 1, 1), (3, 3, 1, 1), (3, 3, 1, 2), (3, 3, 2, 1)]
        );
        assert!(enumerate_quadruples(1, true).is_empty());
        assert_eq!(enumerate_quadruples(10, true).len(), 1025);
    }

    #[test]
    fn quadruple_enumeration_matches_rescan() {
        let max = 6;
        let emitted = enumerate_quadruples(max, false);
        for m in 1..=max {
            for n in 1..=max {
                for k in 1..=max {
                    for l in 1..=max {
                        let ok = k <= m.min(n) && l <= m.min(n) && k as i64 <= n as i64 - l as i64;
                        assert_eq!(emitted.binary_search(&(m, n, k, l)).is_ok(), ok);
                    }
                }
            }
        }
    }

    #[test]
    fn family2_first_example() {
        let params = Family2Params::example(1).unwrap();
        assert_eq!(params.brace_order(), Some(36));
        let data = family2_data(&params).unwrap();
        assert_eq!(data.order(), 36);
        // φ_c depends only on the first coordinate of c
        for c in 0..9 {
            for x in 0..4 {
                assert_eq!(data.phi(c, x), data.phi((c / 3) * 3, x));
            }
        }
        assert!(!data.criterion_meta_trivial());
    }

    #[test]
    fn family2_parameter_errors() {
        let p = MatrixModM::parse_binary_rows("01;11").unwrap();
        assert!(Family2Params::new(3, p.clone(), 2, vec![1, 1]).is_err());
        assert!(Family2Params::new(3, p.clone(), 2, vec![-1, -1]).is_err());
        assert!(Family2Params::new(3, p.clone(), 1, vec![1]).is_err());
        assert!(Family2Params::new(5, p.clone(), 2, vec![1, -1]).is_err());
        let id = MatrixModM::identity(2, 2).unwrap();
        assert!(Family2Params::new(3, id, 2, vec![1, -1]).is_err());
        assert!(Family2Params::new(3, p, 3, vec![1, 1, -1]).is_ok());
    }

    #[test]
    fn listed_matrices_have_their_orders() {
        for i in [1, 2, 3, 5, 6] {
            let params = Family2Params::example(i).unwrap();
            let ord = params.matrix.order(params.matrix.default_order_cap()).unwrap();
            assert_eq!(ord, crate::matrix::MatrixOrder::Finite(params.p), "example {i}");
            assert_eq!(cri_hypothesis(&params.matrix, params.p).unwrap(), Some(1), "example {i}");
        }
    }

    #[test]
    fn fourth_listed_matrix_has_order_seven() {
        let (p, rows) = FAMILY2_EXAMPLES[3];
        let mat = MatrixModM::parse_binary_rows(rows).unwrap();
        assert_eq!(p, 3);
        assert_eq!(mat.order(mat.default_order_cap()).unwrap(), crate::matrix::MatrixOrder::Finite(7));
        let err = Family2Params::example(4).unwrap_err();
        assert!(err.to_string().contains("does not have order 3"), "{err}");
    }

    #[test]
    fn digits_round_trip() {
        for x in 0..125 {
            assert_eq!(from_digits(&digits(x, 5, 3), 5), x);
        }
        assert_eq!(digits(6, 2, 3), vec![1, 1, 0]);
    }
}
