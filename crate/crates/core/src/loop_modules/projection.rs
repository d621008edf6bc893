//! Nonzero `g`-maps `p: g ⊗ V(λ) → V(μ)`.
//!
//! A highest-weight vector `u` of weight `λ` inside `g ⊗ V(μ)` extends, via
//! the lowering words recorded on `V(λ)`, to an embedding
//! `ι: V(λ) → g ⊗ V(μ)`, `v ↦ Σ_a b_a ⊗ m_a(v)`. Contracting the `g` factor
//! with the invariant form gives `p(x ⊗ v) = Σ_a B(x, b_a) m_a(v)`.
//!
//! The number of independent highest-weight vectors is the multiplicity of
//! `V(λ)` in `g ⊗ V(μ)`, computed here without any character theory.

use num_traits::Zero;

use super::irrep::Irrep;
use super::lie::{Generator, LieAlgebra};
use super::ModuleError;
use crate::linalg::{nullspace, SparseMatrix, Q};
use crate::rootsys::Weight;

/// `p` stored as one `dim V(μ) × dim V(λ)` matrix `P_x` per basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub lambda: Weight,
    pub mu: Weight,
    /// `P_x` for each basis element `x` of `g`.
    pub maps: Vec<SparseMatrix>,
    /// Dimension of the space of highest-weight vectors the map was taken from.
    pub multiplicity: usize,
}

impl Projection {
    pub fn zero(alg: &LieAlgebra, lambda: &Irrep, mu: &Irrep) -> Self {
        Projection {
            lambda: lambda.highest().clone(),
            mu: mu.highest().clone(),
            maps: vec![SparseMatrix::zeros(mu.dim(), lambda.dim()); alg.dim()],
            multiplicity: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(SparseMatrix::is_zero)
    }

    pub fn scaled(&self, c: &Q) -> Self {
        Projection { maps: self.maps.iter().map(|m| m.scale(c)).collect(), ..self.clone() }
    }

    /// `p(x ⊗ ·)` for `x = Σ c_a b_a`.
    pub fn at(&self, x: &[(usize, Q)], rows: usize, cols: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(rows, cols);
        for (a, c) in x {
            m.add_scaled(&self.maps[*a], c);
        }
        m
    }

    /// `P_{[y,x]} + P_x ρ_λ(y) = ρ_μ(y) P_x` for every generator `y` and basis `x`.
    pub fn is_equivariant(&self, alg: &LieAlgebra, rho_lambda: &[SparseMatrix], rho_mu: &[SparseMatrix]) -> bool {
        let (rows, cols) = (rho_mu[0].nrows(), rho_lambda[0].nrows());
        alg.generators().into_iter().all(|g| {
            let y = alg.index(g);
            (0..alg.dim()).all(|x| {
                let lhs = self.at(alg.bracket(y, x), rows, cols).add(&self.maps[x].mul(&rho_lambda[y]));
                lhs == rho_mu[y].mul(&self.maps[x])
            })
        })
    }
}

/// Action of each basis element of `g` on `g ⊗ V`, index `a·dim V + k`.
pub fn adjoint_tensor_action(alg: &LieAlgebra, rho: &[SparseMatrix], a: usize) -> SparseMatrix {
    let d = rho[0].nrows();
    alg.ad(a)
        .kron(&SparseMatrix::identity(d))
        .add(&SparseMatrix::identity(alg.dim()).kron(&rho[a]))
}

/// Basis of the vectors of weight `λ` killed by every `x_i^+`.
pub fn highest_weight_vectors(raise: &[SparseMatrix], weights: &[Weight], lambda: &Weight) -> Vec<Vec<Q>> {
    let support: Vec<usize> = (0..weights.len()).filter(|&k| &weights[k] == lambda).collect();
    if support.is_empty() {
        return Vec::new();
    }
    let d = weights.len();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for e in raise {
        let t = e.transpose();
        // row r of the restricted equation collects column entries of e on `support`
        let mut acc: std::collections::BTreeMap<usize, Vec<Q>> = Default::default();
        for (s, &k) in support.iter().enumerate() {
            for (r, x) in t.row(k) {
                acc.entry(r).or_insert_with(|| vec![Q::zero(); support.len()])[s] = x.clone();
            }
        }
        rows.extend(acc.into_values());
    }
    nullspace(&rows, support.len())
        .into_iter()
        .map(|v| {
            let mut full = vec![Q::zero(); d];
            for (s, &k) in support.iter().enumerate() {
                full[k] = v[s].clone();
            }
            full
        })
        .collect()
}

/// Images of the basis of `V(λ)` under the `g`-map sending `v_λ` to `u`,
/// given the action of the `x_i^−` on the target.
pub fn extend_from_highest(source: &Irrep, lower: &[SparseMatrix], u: Vec<Q>) -> Vec<Vec<Q>> {
    let mut images: Vec<Vec<Q>> = Vec::with_capacity(source.dim());
    images.push(u);
    for b in 1..source.dim() {
        let (i, w) = source.parent(b).expect("only v_λ lacks a parent");
        let img = lower[i - 1].mul_vec(&images[w]);
        images.push(img);
    }
    images
}

/// A nonzero `g`-map `g ⊗ V(λ) → V(μ)`, or `HomVanishes`.
pub fn equivariant_projection(alg: &LieAlgebra, lambda: &Irrep, mu: &Irrep) -> Result<Projection, ModuleError> {
    let rho_l = alg.realize(lambda);
    let rho_m = alg.realize(mu);
    let n = alg.root_system().rank();
    let dm = mu.dim();
    let weights: Vec<Weight> = (0..alg.dim())
        .flat_map(|a| mu.weights().iter().map(move |w| (a, w)))
        .map(|(a, w)| alg.basis_weight(a).add(w))
        .collect();
    let raise: Vec<SparseMatrix> =
        (1..=n).map(|i| adjoint_tensor_action(alg, &rho_m, alg.index(Generator::Raise(i)))).collect();
    let hws = highest_weight_vectors(&raise, &weights, lambda.highest());
    let multiplicity = hws.len();
    let Some(u) = hws.into_iter().next() else {
        return Err(ModuleError::HomVanishes { lambda: lambda.highest().to_string(), mu: mu.highest().to_string() });
    };
    let lower: Vec<SparseMatrix> =
        (1..=n).map(|i| adjoint_tensor_action(alg, &rho_m, alg.index(Generator::Lower(i)))).collect();
    let iota = extend_from_highest(lambda, &lower, u);

    let mut maps = vec![SparseMatrix::zeros(dm, lambda.dim()); alg.dim()];
    for (b, col) in iota.iter().enumerate() {
        for (idx, val) in col.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (a, k) = (idx / dm, idx % dm);
            for (c, map) in maps.iter_mut().enumerate() {
                let form = alg.form(c, a);
                if !form.is_zero() {
                    map.add_at(k, b, &(form * val));
                }
            }
        }
    }
    let p = Projection { lambda: lambda.highest().clone(), mu: mu.highest().clone(), maps, multiplicity };
    if p.is_zero() || !p.is_equivariant(alg, &rho_l, &rho_m) {
        return Err(ModuleError::Construction("contracted map failed the equivariance check".into()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::loop_modules::irrep::build_irrep;
    use crate::oracle::adjoint_tensor_multiplicity;
    use crate::rootsys::RootSystem;

    fn setup(t: &str) -> (RootSystem, LieAlgebra) {
        let rs = RootSystem::build(t.parse().unwrap());
        let alg = LieAlgebra::new(&rs).unwrap();
        (rs, alg)
    }

    #[test]
    fn sl2_examples() {
        let (rs, alg) = setup("A1");
        let v = |m: i64| build_irrep(&rs, &Weight(vec![m])).unwrap();
        assert!(equivariant_projection(&alg, &v(2), &v(2)).is_ok());
        assert!(equivariant_projection(&alg, &v(3), &v(1)).is_ok());
        assert!(matches!(equivariant_projection(&alg, &v(1), &v(4)), Err(ModuleError::HomVanishes { .. })));
    }

    /// With `V(2ω_1)` identified with `g`, the map is antisymmetric, as the
    /// bracket is (and `Hom(g ⊗ g, g)` is one-dimensional for sl2).
    #[test]
    fn sl2_adjoint_map_is_the_bracket() {
        let (rs, alg) = setup("A1");
        let adj = build_irrep(&rs, &Weight(vec![2])).unwrap();
        let p = equivariant_projection(&alg, &adj, &adj).unwrap();
        assert_eq!(p.multiplicity, 1);
        // φ: V(2ω_1) → g sending v_top to e_θ
        let lower = [alg.ad(alg.index(Generator::Lower(1))).clone()];
        let mut top = vec![q(0); 3];
        top[alg.index(Generator::Raise(1))] = q(1);
        let phi = extend_from_highest(&adj, &lower, top);
        // coordinates of b_y in the V(2ω_1) basis: invert φ
        let rows: Vec<Vec<Q>> = (0..3).map(|a| (0..3).map(|b| phi[b][a].clone()).collect()).collect();
        let inv = |y: usize| {
            let mut e = vec![q(0); 3];
            e[y] = q(1);
            crate::linalg::solve(&rows, &e, 3).unwrap()
        };
        for x in 0..3 {
            for y in 0..3 {
                let pxy = p.maps[x].mul_vec(&inv(y));
                let pyx = p.maps[y].mul_vec(&inv(x));
                assert!(pxy.iter().zip(&pyx).all(|(a, b)| (a + b).is_zero()));
            }
        }
    }

    #[test]
    fn multiplicity_matches_klimyk_on_a2() {
        let (rs, alg) = setup("A2");
        let ws = [[0, 0], [1, 0], [0, 1], [1, 1], [2, 0], [3, 0], [2, 1]];
        let irreps: Vec<Irrep> = ws.iter().map(|w| build_irrep(&rs, &Weight(w.to_vec())).unwrap()).collect();
        for l in &irreps {
            for m in &irreps {
                let klimyk = adjoint_tensor_multiplicity(&rs, m.highest(), l.highest()).unwrap() as usize;
                match equivariant_projection(&alg, l, m) {
                    Ok(p) => assert_eq!(p.multiplicity, klimyk, "{} {}", l.highest(), m.highest()),
                    Err(_) => assert_eq!(klimyk, 0),
                }
            }
        }
    }
}
