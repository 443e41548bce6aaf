//! Skew braces on `B × C` from a pair of actions.
//!
//! Given groups `B`, `C` with `C` abelian, and homomorphisms
//! `φ: C → Aut(B)`, `ψ: B → Aut(C)` satisfying `φ_{ψ_b(c)} = φ_c`, the carrier
//! `B × C` carries
//!
//! ```text
//! (b₁,c₁)·(b₂,c₂) = (b₁ φ_{c₁}(b₂), c₁c₂)
//! (b₁,c₁)∘(b₂,c₂) = (b₁b₂, c₁ ψ_{b₁}(c₂))
//! ```
//!
//! The pair `(b, c)` is stored at index `b·|C| + c`.

use rayon::prelude::*;
use serde::Serialize;

use crate::brace::{SkewBrace, SubsetStatus};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{carrier_cap, GroupTable};

/// Uncertified input: groups and per-element automorphism tables.
#[derive(Debug, Clone)]
pub struct BicrossedSpec {
    pub b_group: GroupTable,
    pub c_group: GroupTable,
    /// `phi[c][x] = φ_c(x)`
    pub phi: Vec<Vec<u32>>,
    /// `psi[b][y] = ψ_b(y)`
    pub psi: Vec<Vec<u32>>,
}

impl BicrossedSpec {
    pub fn from_fns(
        b_group: GroupTable,
        c_group: GroupTable,
        phi: impl Fn(usize, usize) -> usize,
        psi: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let (nb, nc) = (b_group.order(), c_group.order());
        let phi = (0..nc)
            .map(|c| (0..nb).map(|x| phi(c, x) as u32).collect())
            .collect();
        let psi = (0..nb)
            .map(|b| (0..nc).map(|y| psi(b, y) as u32).collect())
            .collect();
        BicrossedSpec {
            b_group,
            c_group,
            phi,
            psi,
        }
    }

    /// `B = Z/q`, `C = Z/n`, `φ_c(x) = a^c x mod q`, `ψ_b(y) = u^b y mod n`.
    pub fn cyclic(q: usize, n: usize, a: u64, u: u64) -> Result<Self> {
        let b_group = GroupTable::cyclic(q)?;
        let c_group = GroupTable::cyclic(n)?;
        let (q64, n64) = (q as u64, n as u64);
        let phi_mult: Vec<u64> = (0..n as u64).map(|c| pow_mod(a, c, q64)).collect();
        let psi_mult: Vec<u64> = (0..q as u64).map(|b| pow_mod(u, b, n64)).collect();
        Ok(Self::from_fns(
            b_group,
            c_group,
            |c, x| (phi_mult[c] * x as u64 % q64) as usize,
            |b, y| (psi_mult[b] * y as u64 % n64) as usize,
        ))
    }

    /// Checks every hypothesis of the construction and freezes the data.
    pub fn certify(self) -> Result<BicrossedData> {
        let BicrossedSpec {
            b_group,
            c_group,
            phi,
            psi,
        } = self;
        b_group.validate()?;
        c_group.validate()?;
        if let Some((x, y)) = c_group.commuting_witness() {
            return Err(Error::Domain(format!(
                "C = {} is not abelian: {x} and {y} do not commute",
                c_group.label()
            )));
        }
        let (nb, nc) = (b_group.order(), c_group.order());
        check_shape("phi", &phi, nc, nb)?;
        check_shape("psi", &psi, nb, nc)?;
        check_automorphisms("phi", &phi, &b_group)?;
        check_automorphisms("psi", &psi, &c_group)?;
        check_action("phi", &phi, &c_group)?;
        check_action("psi", &psi, &b_group)?;
        for b in 0..nb {
            for c in 0..nc {
                if phi[psi[b][c] as usize] != phi[c] {
                    return Err(Error::Compatibility { b, c });
                }
            }
        }
        Ok(BicrossedData {
            b_group,
            c_group,
            phi,
            psi,
        })
    }
}

fn check_shape(name: &str, maps: &[Vec<u32>], count: usize, size: usize) -> Result<()> {
    if maps.len() != count {
        return Err(Error::Shape(format!("{name} has {} maps, expected {count}", maps.len())));
    }
    if let Some(i) = maps.iter().position(|m| m.len() != size) {
        return Err(Error::Shape(format!("{name}[{i}] has length {}, expected {size}", maps[i].len())));
    }
    Ok(())
}

fn check_automorphisms(name: &str, maps: &[Vec<u32>], target: &GroupTable) -> Result<()> {
    let n = target.order();
    for (index, m) in maps.iter().enumerate() {
        let mut hit = vec![false; n];
        let bijective = m.iter().all(|&x| {
            let x = x as usize;
            x < n && !std::mem::replace(&mut hit[x], true)
        });
        let hom = bijective
            && (0..n).all(|x| {
                (0..n).all(|y| m[target.mul(x, y)] as usize == target.mul(m[x] as usize, m[y] as usize))
            });
        if !hom {
            return Err(Error::NotAutomorphism {
                map: name.to_string(),
                index,
            });
        }
    }
    Ok(())
}

/// `maps[s·t] = maps[s] ∘ maps[t]`.
fn check_action(name: &str, maps: &[Vec<u32>], source: &GroupTable) -> Result<()> {
    let n = source.order();
    for a in 0..n {
        for b in 0..n {
            let composed: Vec<u32> = maps[b].iter().map(|&x| maps[a][x as usize]).collect();
            if maps[source.mul(a, b)] != composed {
                return Err(Error::MapLaw {
                    map: name.to_string(),
                    a,
                    b,
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = u128::from(modulus);
    let mut acc = 1u128;
    let mut b = u128::from(base) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Certified construction data. Only obtainable through
/// [`BicrossedSpec::certify`].
#[derive(Debug, Clone)]
pub struct BicrossedData {
    b_group: GroupTable,
    c_group: GroupTable,
    phi: Vec<Vec<u32>>,
    psi: Vec<Vec<u32>>,
}

/// Predicted ideal statuses of one factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorPrediction {
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub left_ideal_op: bool,
    pub right_ideal_op: bool,
}

impl FactorPrediction {
    /// Whether the four ideal statuses of `status` agree with the prediction.
    pub fn matches(&self, status: &SubsetStatus) -> bool {
        self.left_ideal == status.left_ideal
            && self.right_ideal == status.right_ideal
            && self.left_ideal_op == status.left_ideal_op
            && self.right_ideal_op == status.right_ideal_op
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealProfile {
    /// `B × 1`
    pub b_factor: FactorPrediction,
    /// `1 × C`
    pub c_factor: FactorPrediction,
}

impl BicrossedData {
    pub fn b_group(&self) -> &GroupTable {
        &self.b_group
    }

    pub fn c_group(&self) -> &GroupTable {
        &self.c_group
    }

    /// `φ_c(x)`
    #[inline]
    pub fn phi(&self, c: usize, x: usize) -> usize {
        self.phi[c][x] as usize
    }

    /// `ψ_b(y)`
    #[inline]
    pub fn psi(&self, b: usize, y: usize) -> usize {
        self.psi[b][y] as usize
    }

    pub fn order(&self) -> usize {
        self.b_group.order() * self.c_group.order()
    }

    pub fn encode(&self, b: usize, c: usize) -> usize {
        b * self.c_group.order() + c
    }

    pub fn decode(&self, a: usize) -> (usize, usize) {
        (a / self.c_group.order(), a % self.c_group.order())
    }

    pub fn phi_is_trivial(&self) -> bool {
        self.phi.iter().all(|m| m.iter().enumerate().all(|(x, &y)| x == y as usize))
    }

    pub fn psi_is_trivial(&self) -> bool {
        self.psi.iter().all(|m| m.iter().enumerate().all(|(x, &y)| x == y as usize))
    }

    /// `B × 1` inside the carrier.
    pub fn b_factor(&self) -> ElemSet {
        let e = self.c_group.identity();
        ElemSet::from_elems(self.order(), (0..self.b_group.order()).map(|b| self.encode(b, e)))
    }

    /// `1 × C` inside the carrier.
    pub fn c_factor(&self) -> ElemSet {
        let e = self.b_group.identity();
        ElemSet::from_elems(self.order(), (0..self.c_group.order()).map(|c| self.encode(e, c)))
    }

    /// The brace on `B × C`, validated in full.
    pub fn build(&self) -> Result<SkewBrace> {
        let order = self.order();
        let cap = carrier_cap();
        if order > cap {
            return Err(Error::Capacity { order, cap });
        }
        let (b, c) = (&self.b_group, &self.c_group);
        let dot = GroupTable::from_fn(order, format!("{} x| {}", b.label(), c.label()), |x, y| {
            let ((b1, c1), (b2, c2)) = (self.decode(x), self.decode(y));
            self.encode(b.mul(b1, self.phi(c1, b2)), c.mul(c1, c2))
        })?;
        let circle = GroupTable::from_fn(order, format!("{} |x {}", b.label(), c.label()), |x, y| {
            let ((b1, c1), (b2, c2)) = (self.decode(x), self.decode(y));
            self.encode(b.mul(b1, b2), c.mul(c1, self.psi(b1, c2)))
        })?;
        Ok(SkewBrace::new(dot, circle)?.with_label(format!("bicrossed({}, {})", b.label(), c.label())))
    }

    /// First `(b₁, c₁, b₂, c₂)` where
    /// `ψ_{φ_{c₁}(b₁)b₁⁻¹}(ψ_{b₂}(c₂)c₂⁻¹) ≠ ψ_{b₂}(c₂)c₂⁻¹`.
    pub fn criterion_witness(&self) -> Option<(usize, usize, usize, usize)> {
        let (b, c) = (&self.b_group, &self.c_group);
        let (nb, nc) = (b.order(), c.order());
        (0..nb).into_par_iter().find_map_first(|b1| {
            for c1 in 0..nc {
                let x = b.mul(self.phi(c1, b1), b.inv(b1));
                for b2 in 0..nb {
                    for c2 in 0..nc {
                        let y = c.mul(self.psi(b2, c2), c.inv(c2));
                        if self.psi(x, y) != y {
                            return Some((b1, c1, b2, c2));
                        }
                    }
                }
            }
            None
        })
    }

    /// Meta-triviality of the built brace, decided on the data alone.
    pub fn criterion_meta_trivial(&self) -> bool {
        self.criterion_witness().is_none()
    }

    pub fn ideal_profile(&self) -> IdealProfile {
        let phi_trivial = self.phi_is_trivial();
        let psi_trivial = self.psi_is_trivial();
        IdealProfile {
            b_factor: FactorPrediction {
                left_ideal: true,
                right_ideal: psi_trivial,
                left_ideal_op: true,
                right_ideal_op: psi_trivial,
            },
            c_factor: FactorPrediction {
                left_ideal: true,
                right_ideal: phi_trivial,
                left_ideal_op: phi_trivial,
                right_ideal_op: true,
            },
        }
    }

    /// `{(1, ψ_b(c)c⁻¹)} ∪ {(φ_{c⁻¹}(b)b⁻¹, 1)}` over all `b`, `c`.
    pub fn derived_generators(&self) -> ElemSet {
        let (b, c) = (&self.b_group, &self.c_group);
        let mut gens = ElemSet::empty(self.order());
        for x in 0..b.order() {
            for y in 0..c.order() {
                gens.insert(self.encode(b.identity(), c.mul(self.psi(x, y), c.inv(y))));
                gens.insert(self.encode(b.mul(self.phi(c.inv(y), x), b.inv(x)), c.identity()));
            }
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_maps(count: usize, size: usize) -> Vec<Vec<u32>> {
        vec![(0..size as u32).collect(); count]
    }

    #[test]
    fn trivial_actions_give_the_direct_product() {
        let spec = BicrossedSpec::cyclic(3, 4, 1, 1).unwrap();
        let data = spec.certify().unwrap();
        let br = data.build().unwrap();
        assert!(br.is_trivial());
        let z = GroupTable::direct_product(data.b_group(), data.c_group()).unwrap();
        assert_eq!(br.dot().table(), z.table());
        assert!(data.criterion_meta_trivial());
        let p = data.ideal_profile();
        assert!(p.b_factor.right_ideal && p.c_factor.left_ideal_op);
    }

    #[test]
    fn psi_trivial_always_certifies() {
        // φ_c = multiplication by 2^c on Z/7 (2 has order 3), C = Z/3, ψ trivial
        let data = BicrossedSpec::cyclic(7, 3, 2, 1).unwrap().certify().unwrap();
        assert!(data.psi_is_trivial() && !data.phi_is_trivial());
        let br = data.build().unwrap();
        assert!(!br.is_trivial());
        assert!(data.criterion_meta_trivial());
        assert!(br.is_meta_trivial());
    }

    #[test]
    fn nonabelian_c_is_rejected() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let z2 = GroupTable::cyclic(2).unwrap();
        let spec = BicrossedSpec {
            phi: identity_maps(6, 2),
            psi: identity_maps(2, 6),
            b_group: z2,
            c_group: s3,
        };
        assert!(matches!(spec.certify(), Err(Error::Domain(_))));
    }

    #[test]
    fn incompatible_actions_yield_witness() {
        // B = Z/14, φ_c(x) = 9^c x (9 has order 3 mod 14), C = Z/3,
        // ψ_b(y) = (-1)^b y. Then φ_{ψ_1(1)} = φ_2 ≠ φ_1.
        let spec = BicrossedSpec::cyclic(14, 3, 9, 2).unwrap();
        match spec.certify() {
            Err(Error::Compatibility { b, c }) => {
                assert_eq!(b % 2, 1);
                assert_ne!(c, 0);
            }
            other => panic!("expected compatibility failure, got {other:?}"),
        }
    }

    #[test]
    fn non_homomorphic_phi_is_rejected() {
        // 2^c on Z/5 for c ∈ Z/3 is not a homomorphism from Z/3
        let spec = BicrossedSpec::cyclic(5, 3, 2, 1).unwrap();
        assert!(matches!(spec.certify(), Err(Error::MapLaw { .. })));
    }

    #[test]
    fn star_values_on_generators() {
        let data = BicrossedSpec::cyclic(7, 3, 2, 1).unwrap().certify().unwrap();
        let br = data.build().unwrap();
        let (b, c) = (data.b_group(), data.c_group());
        for x in 0..b.order() {
            for y in 0..c.order() {
                let bx = data.encode(x, c.identity());
                let cy = data.encode(b.identity(), y);
                assert_eq!(br.star(bx, cy), data.encode(b.identity(), c.mul(data.psi(x, y), c.inv(y))));
                assert_eq!(
                    br.star(cy, bx),
                    data.encode(b.mul(data.phi(c.inv(y), x), b.inv(x)), c.identity())
                );
            }
        }
    }
}
