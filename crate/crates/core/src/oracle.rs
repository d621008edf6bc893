//! Independent multiplicity engine: Weyl dimension formula, Freudenthal's
//! recursion for weight multiplicities, and Klimyk's formula for the
//! multiplicity of `V(ν)` inside `g ⊗ V(μ)`.
//!
//! Everything here is integer arithmetic on ω-coordinates. The adjoint
//! module has the closed-form weight system "all roots, plus 0 with
//! multiplicity rank", which is what makes the Klimyk sum cheap even for E8.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::rootsys::{RootSystem, RootVector, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
}

fn require_dominant(w: &Weight) -> Result<(), OracleError> {
    if w.is_dominant() {
        Ok(())
    } else {
        Err(OracleError::NotDominant(w.clone()))
    }
}

/// `Π_{α>0} (λ+ρ, α)/(ρ, α)`, evaluated exactly.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint, OracleError> {
    require_dominant(lambda)?;
    let shifted = lambda.add(&rs.rho());
    let rho = rs.rho();
    let mut prod = BigRational::one();
    for beta in rs.positive_roots() {
        prod *= BigRational::new(
            BigInt::from(rs.pair_with_root(&shifted, beta)),
            BigInt::from(rs.pair_with_root(&rho, beta)),
        );
    }
    debug_assert!(prod.is_integer());
    Ok(prod.to_integer().to_biguint().expect("dimension is positive"))
}

/// Convenience for small modules.
pub fn weyl_dim_u64(rs: &RootSystem, lambda: &Weight) -> Result<u64, OracleError> {
    Ok(weyl_dim(rs, lambda)?.to_u64().expect("dimension fits in u64"))
}

/// Multiplicities of the dominant weights of `V(λ)`.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    highest: Weight,
    dominant: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn dominant_multiplicities(&self) -> &BTreeMap<Weight, u64> {
        &self.dominant
    }

    /// Multiplicity of an arbitrary weight, via its dominant conjugate.
    pub fn multiplicity(&self, rs: &RootSystem, mu: &Weight) -> u64 {
        self.dominant.get(&rs.dominant_conjugate(mu)).copied().unwrap_or(0)
    }

    /// Every weight with its multiplicity (orbits of the dominant ones).
    pub fn all_weights(&self, rs: &RootSystem) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for (w, &m) in &self.dominant {
            for x in weyl_orbit(rs, w) {
                out.insert(x, m);
            }
        }
        out
    }

    pub fn dimension(&self, rs: &RootSystem) -> u64 {
        self.dominant.iter().map(|(w, &m)| m * weyl_orbit(rs, w).len() as u64).sum()
    }
}

/// Weyl orbit of a weight by breadth-first search over simple reflections.
pub fn weyl_orbit(rs: &RootSystem, w: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for i in 1..=rs.rank() {
            let y = rs.reflect(&x, i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn height_below(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> i64 {
    rs.integral_root_coords(&lambda.sub(mu)).expect("same coset").height()
}

/// Freudenthal's recursion on the dominant weights of `V(λ)`.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<WeightSystem, OracleError> {
    require_dominant(lambda)?;
    // Dominant weights below λ are connected through dominant weights by
    // subtracting positive roots.
    let mut dominant: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    dominant.insert(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for beta in rs.positive_roots_omega() {
            let nu = mu.sub(beta);
            if nu.is_dominant() && dominant.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<Weight> = dominant.into_iter().collect();
    order.sort_by_key(|mu| height_below(rs, lambda, mu));

    let shifted = lambda.add(&rs.rho()).add(&rs.rho());
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    mult.insert(lambda.clone(), 1);
    for mu in order.iter().skip(1) {
        // (λ+ρ,λ+ρ) − (μ+ρ,μ+ρ) = (λ−μ, λ+μ+2ρ)
        let diff = rs.integral_root_coords(&lambda.sub(mu)).expect("same coset");
        let denom = rs.pair_with_root(&shifted.add(mu), &diff);
        let mut numer: i64 = 0;
        for (beta, beta_w) in rs.positive_roots().iter().zip(rs.positive_roots_omega()) {
            let mut k = 1;
            loop {
                let up = mu.add(&beta_w.scale(k));
                let m = mult.get(&rs.dominant_conjugate(&up)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                numer += 2 * rs.pair_with_root(&up, beta) * m as i64;
                k += 1;
            }
        }
        assert!(denom > 0 && numer % denom == 0, "Freudenthal recursion produced a non-integer");
        let m = (numer / denom) as u64;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }
    Ok(WeightSystem { highest: lambda.clone(), dominant: mult })
}

/// Whether the zero weight occurs in `V(ν)`.
pub fn kostant_zero_weight(rs: &RootSystem, nu: &Weight) -> Result<bool, OracleError> {
    let ws = weight_multiplicities(rs, nu)?;
    Ok(ws.dominant.contains_key(&Weight::zero(rs.rank())))
}

/// Move `x` into the dominant chamber by simple reflections, tracking the
/// sign of the Weyl element. Returns `None` if `x` lies on a wall.
fn reflect_to_dominant_signed(rs: &RootSystem, x: &Weight) -> Option<(Weight, i64)> {
    let mut cur = x.clone();
    let mut sign = 1;
    loop {
        if cur.0.iter().any(|&c| c == 0) {
            return None;
        }
        match cur.0.iter().position(|&c| c < 0) {
            Some(i) => {
                cur = rs.reflect(&cur, i + 1);
                sign = -sign;
            }
            None => return Some((cur, sign)),
        }
    }
}

/// Multiplicity of `V(ν)` in `g ⊗ V(μ)` by Klimyk's formula over the adjoint
/// weight system.
pub fn adjoint_tensor_multiplicity(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Result<u64, OracleError> {
    require_dominant(mu)?;
    require_dominant(nu)?;
    let rho = rs.rho();
    let base = mu.add(&rho);
    let target = nu.add(&rho);
    let mut total: i64 = 0;
    let mut visit = |beta: &Weight, m: i64| {
        if let Some((w, sign)) = reflect_to_dominant_signed(rs, &base.add(beta)) {
            if w == target {
                total += sign * m;
            }
        }
    };
    for beta in rs.positive_roots_omega() {
        visit(beta, 1);
        visit(&beta.neg(), 1);
    }
    visit(&Weight::zero(rs.rank()), rs.rank() as i64);
    assert!(total >= 0, "Klimyk sum went negative");
    Ok(total as u64)
}

/// All `ν` with nonzero multiplicity in `g ⊗ V(μ)`, with multiplicities.
pub fn adjoint_tensor_decomposition(rs: &RootSystem, mu: &Weight) -> Result<BTreeMap<Weight, u64>, OracleError> {
    require_dominant(mu)?;
    let mut candidates: BTreeSet<Weight> = BTreeSet::new();
    for beta in rs.positive_roots_omega() {
        candidates.insert(mu.add(beta));
        candidates.insert(mu.sub(beta));
    }
    candidates.insert(mu.clone());
    let mut out = BTreeMap::new();
    for nu in candidates.into_iter().filter(|w| w.is_dominant()) {
        let m = adjoint_tensor_multiplicity(rs, mu, &nu)?;
        if m > 0 {
            out.insert(nu, m);
        }
    }
    Ok(out)
}

/// `Hom_g(g ⊗ V(μ), V(ν)) ≠ 0`.
///
/// `ν − μ` must be a weight of `g` (a root or zero), which is checked first.
pub fn hom_nonzero(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Result<bool, OracleError> {
    require_dominant(mu)?;
    require_dominant(nu)?;
    let diff = nu.sub(mu);
    if !(diff.is_zero() || rs.is_root(&diff)) {
        return Ok(false);
    }
    Ok(adjoint_tensor_multiplicity(rs, mu, nu)? > 0)
}

/// The root `β` with `ν = μ + β`, if any; used in reports.
pub fn step_root(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Option<RootVector> {
    let diff = nu.sub(mu);
    rs.is_root(&diff).then(|| rs.integral_root_coords(&diff)).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn weyl_dim_examples() {
        let a1 = rs("A1");
        for m in 0..10 {
            assert_eq!(weyl_dim_u64(&a1, &Weight(vec![m])).unwrap(), m as u64 + 1);
        }
        assert_eq!(weyl_dim_u64(&rs("A2"), &Weight(vec![1, 1])).unwrap(), 8);
        let g2 = rs("G2");
        assert_eq!(weyl_dim_u64(&g2, &Weight(vec![1, 0])).unwrap(), 7);
        assert_eq!(weyl_dim_u64(&g2, &Weight(vec![0, 1])).unwrap(), 14);
        assert_eq!(weyl_dim_u64(&rs("E8"), &Weight::fundamental(8, 1)).unwrap(), 248);
        assert_eq!(weyl_dim_u64(&rs("E7"), &Weight::fundamental(7, 1)).unwrap(), 56);
        assert_eq!(weyl_dim_u64(&rs("E6"), &Weight::fundamental(6, 1)).unwrap(), 27);
        assert_eq!(weyl_dim_u64(&rs("F4"), &Weight::fundamental(4, 1)).unwrap(), 26);
        assert!(weyl_dim(&a1, &Weight(vec![-1])).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        let a2 = rs("A2");
        let ad = weight_multiplicities(&a2, &a2.theta_weight()).unwrap();
        assert_eq!(ad.multiplicity(&a2, &Weight(vec![0, 0])), 2);
        assert_eq!(ad.dimension(&a2), 8);

        let a1 = rs("A1");
        let all = weight_multiplicities(&a1, &Weight(vec![2])).unwrap().all_weights(&a1);
        assert_eq!(all.into_iter().collect::<Vec<_>>(), vec![
            (Weight(vec![-2]), 1),
            (Weight(vec![0]), 1),
            (Weight(vec![2]), 1)
        ]);

        let fund = weight_multiplicities(&a2, &Weight(vec![1, 0])).unwrap();
        assert_eq!(fund.all_weights(&a2).len(), 3);
        assert!(!fund.all_weights(&a2).contains_key(&Weight(vec![0, 0])));
    }

    #[test]
    fn kostant_examples() {
        let a2 = rs("A2");
        assert!(kostant_zero_weight(&a2, &a2.theta_weight()).unwrap());
        assert!(!kostant_zero_weight(&a2, &Weight(vec![1, 0])).unwrap());
        for t in ["B3", "E6", "G2"] {
            let r = rs(t);
            assert!(kostant_zero_weight(&r, &Weight::zero(r.rank())).unwrap());
        }
    }

    #[test]
    fn adjoint_multiplicity_examples() {
        let a1 = rs("A1");
        assert_eq!(adjoint_tensor_multiplicity(&a1, &Weight(vec![1]), &Weight(vec![3])).unwrap(), 1);
        assert_eq!(adjoint_tensor_multiplicity(&a1, &Weight(vec![1]), &Weight(vec![1])).unwrap(), 1);
        assert_eq!(adjoint_tensor_multiplicity(&a1, &Weight(vec![0]), &Weight(vec![0])).unwrap(), 0);
        let a2 = rs("A2");
        assert!(adjoint_tensor_multiplicity(&a2, &Weight(vec![1, 1]), &Weight(vec![3, 0])).unwrap() >= 1);
        // g ⊗ g for sl3 contains g twice
        assert_eq!(adjoint_tensor_multiplicity(&a2, &Weight(vec![1, 1]), &Weight(vec![1, 1])).unwrap(), 2);
    }

    #[test]
    fn hom_examples() {
        let a1 = rs("A1");
        assert!(hom_nonzero(&a1, &Weight(vec![1]), &Weight(vec![3])).unwrap());
        assert!(!hom_nonzero(&a1, &Weight(vec![1]), &Weight(vec![4])).unwrap());
        for t in ["A3", "C2", "E7", "F4"] {
            let r = rs(t);
            assert!(hom_nonzero(&r, &Weight::zero(r.rank()), &r.theta_weight()).unwrap(), "{t}");
        }
    }

    #[test]
    fn orbit_sizes() {
        // |W| for A2 is 6; a regular weight has a full orbit
        assert_eq!(weyl_orbit(&rs("A2"), &Weight(vec![1, 1])).len(), 6);
        assert_eq!(weyl_orbit(&rs("G2"), &Weight(vec![1, 1])).len(), 12);
        assert_eq!(weyl_orbit(&rs("B3"), &Weight(vec![1, 1, 1])).len(), 48);
    }
}
