//! Finite descriptions of `L(g)`-actions.
//!
//! Every module here is given by jet data: a list of terms, each a point
//! `a ∈ ℚ^×`, a kind (value or first derivative), and one matrix per basis
//! element of `g`. The element `x ⊗ t^r` acts by
//!
//! ```text
//!     Σ_value a^r M_x  +  Σ_derivative r a^{r−1} M_x
//! ```
//!
//! which covers evaluation modules, their tensor products and the extension
//! modules `V(λ, μ, a)`.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::irrep::Irrep;
use super::lie::{Generator, LieAlgebra};
use super::projection::Projection;
use super::ModuleError;
use crate::linalg::{q, q_pow, SparseMatrix, Q};
use crate::rootsys::{LieType, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JetKind {
    Value,
    Derivative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetTerm {
    pub point: Q,
    pub kind: JetKind,
    pub mats: Vec<SparseMatrix>,
}

impl JetTerm {
    /// The scalar multiplying this term in the action of `x ⊗ t^r`.
    pub fn coefficient(&self, r: i64) -> Q {
        match self.kind {
            JetKind::Value => q_pow(&self.point, r),
            JetKind::Derivative if r == 0 => Q::zero(),
            JetKind::Derivative => q(r) * q_pow(&self.point, r - 1),
        }
    }
}

/// A Laurent polynomial `Σ c_k t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly(pub BTreeMap<i64, Q>);

impl LaurentPoly {
    pub fn monomial(k: i64, c: Q) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        LaurentPoly(m)
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    /// `t − a`.
    pub fn t_minus(a: &Q) -> Self {
        let mut m = BTreeMap::from([(1, Q::one())]);
        if !a.is_zero() {
            m.insert(0, -a.clone());
        }
        LaurentPoly(m)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out: BTreeMap<i64, Q> = BTreeMap::new();
        for (i, x) in &self.0 {
            for (j, y) in &other.0 {
                *out.entry(i + j).or_insert_with(Q::zero) += x * y;
            }
        }
        out.retain(|_, x| !x.is_zero());
        LaurentPoly(out)
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        (0..e).fold(LaurentPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, a: &Q) -> Q {
        self.0.iter().map(|(k, c)| c * q_pow(a, *k)).fold(Q::zero(), |s, t| s + t)
    }

    pub fn derivative_at(&self, a: &Q) -> Q {
        self.0
            .iter()
            .filter(|(k, _)| **k != 0)
            .map(|(k, c)| c * q(*k) * q_pow(a, k - 1))
            .fold(Q::zero(), |s, t| s + t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopModule {
    lie_type: LieType,
    dim: usize,
    weights: Vec<Weight>,
    terms: Vec<JetTerm>,
}

impl LoopModule {
    pub fn new(lie_type: LieType, weights: Vec<Weight>, terms: Vec<JetTerm>) -> Self {
        let mut m = LoopModule { lie_type, dim: weights.len(), weights, terms: Vec::new() };
        for t in terms {
            m.push_term(t);
        }
        m
    }

    fn push_term(&mut self, t: JetTerm) {
        match self.terms.iter_mut().find(|s| s.point == t.point && s.kind == t.kind) {
            Some(s) => {
                for (a, b) in s.mats.iter_mut().zip(&t.mats) {
                    *a = a.add(b);
                }
            }
            None => self.terms.push(t),
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `g`-weight of each basis vector.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn terms(&self) -> &[JetTerm] {
        &self.terms
    }

    /// The distinct spectral points carried by the construction data.
    pub fn points(&self) -> Vec<Q> {
        let mut p: Vec<Q> = self.terms.iter().map(|t| t.point.clone()).collect();
        p.sort();
        p.dedup();
        p
    }

    /// Matrix of `b_x ⊗ t^r`.
    pub fn action(&self, x: usize, r: i64) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim, self.dim);
        for t in &self.terms {
            let c = t.coefficient(r);
            if !c.is_zero() {
                m.add_scaled(&t.mats[x], &c);
            }
        }
        m
    }

    /// Matrix of `(Σ c_a b_a) ⊗ t^r`.
    pub fn action_combination(&self, x: &[(usize, Q)], r: i64) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim, self.dim);
        for (a, c) in x {
            m.add_scaled(&self.action(*a, r), c);
        }
        m
    }

    /// Matrix of `b_x ⊗ f`.
    pub fn action_poly(&self, x: usize, f: &LaurentPoly) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim, self.dim);
        for (k, c) in &f.0 {
            m.add_scaled(&self.action(x, *k), c);
        }
        m
    }

    pub fn tensor(&self, other: &LoopModule) -> Result<LoopModule, ModuleError> {
        if self.lie_type != other.lie_type {
            return Err(ModuleError::Mismatch);
        }
        let (i1, i2) = (SparseMatrix::identity(self.dim), SparseMatrix::identity(other.dim));
        let weights = self.weights.iter().flat_map(|a| other.weights.iter().map(move |b| a.add(b))).collect();
        let terms = self
            .terms
            .iter()
            .map(|t| JetTerm { mats: t.mats.iter().map(|m| m.kron(&i2)).collect(), ..t.clone() })
            .chain(
                other
                    .terms
                    .iter()
                    .map(|t| JetTerm { mats: t.mats.iter().map(|m| i1.kron(m)).collect(), ..t.clone() }),
            )
            .collect();
        Ok(LoopModule::new(self.lie_type, weights, terms))
    }

    pub fn direct_sum(&self, other: &LoopModule) -> Result<LoopModule, ModuleError> {
        if self.lie_type != other.lie_type {
            return Err(ModuleError::Mismatch);
        }
        let d = self.dim + other.dim;
        let place = |m: &SparseMatrix, at: usize| {
            let mut out = SparseMatrix::zeros(d, d);
            out.place(at, at, m);
            out
        };
        let weights = self.weights.iter().chain(&other.weights).cloned().collect();
        let terms = self
            .terms
            .iter()
            .map(|t| JetTerm { mats: t.mats.iter().map(|m| place(m, 0)).collect(), ..t.clone() })
            .chain(
                other
                    .terms
                    .iter()
                    .map(|t| JetTerm { mats: t.mats.iter().map(|m| place(m, self.dim)).collect(), ..t.clone() }),
            )
            .collect();
        Ok(LoopModule::new(self.lie_type, weights, terms))
    }

    /// Check `ρ([x ⊗ t^r, y ⊗ t^s]) = [ρ(x ⊗ t^r), ρ(y ⊗ t^s)]` for all
    /// pairs of Chevalley generators and all `r, s` in `powers`. Returns the
    /// first failing `(x, r, y, s)`.
    pub fn check_lie_action(
        &self,
        alg: &LieAlgebra,
        powers: std::ops::RangeInclusive<i64>,
    ) -> Result<(), (Generator, i64, Generator, i64)> {
        let gens = alg.generators();
        let powers: Vec<i64> = powers.collect();
        let mut cache: BTreeMap<(usize, i64), SparseMatrix> = BTreeMap::new();
        let act = |x: usize, r: i64, cache: &mut BTreeMap<(usize, i64), SparseMatrix>| {
            cache.entry((x, r)).or_insert_with(|| self.action(x, r)).clone()
        };
        for (gi, &gx) in gens.iter().enumerate() {
            for &gy in &gens[gi..] {
                let (x, y) = (alg.index(gx), alg.index(gy));
                for &r in &powers {
                    for &s in &powers {
                        let ax = act(x, r, &mut cache);
                        let ay = act(y, s, &mut cache);
                        let mut lhs = SparseMatrix::zeros(self.dim, self.dim);
                        for (c, k) in alg.bracket(x, y) {
                            lhs.add_scaled(&act(*c, r + s, &mut cache), k);
                        }
                        if lhs != ax.commutator(&ay) {
                            return Err((gx, r, gy, s));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lie_action_holds(&self, alg: &LieAlgebra) -> bool {
        self.check_lie_action(alg, -2..=2).is_ok()
    }

    /// `{dim, generators: [{name, power, matrix}]}` with entries `[num, den]`.
    pub fn to_json(&self, alg: &LieAlgebra, powers: std::ops::RangeInclusive<i64>) -> Value {
        let mut gens = Vec::new();
        for g in alg.generators() {
            for r in powers.clone() {
                let m = self.action(alg.index(g), r);
                let rows: Vec<Vec<Value>> = (0..self.dim)
                    .map(|i| (0..self.dim).map(|j| rational_json(&m.get(i, j))).collect())
                    .collect();
                gens.push(json!({"name": g.name(), "power": r, "matrix": rows}));
            }
        }
        json!({"dim": self.dim, "generators": gens})
    }
}

/// `[num, den]`, falling back to decimal strings outside the 64-bit range.
pub fn rational_json(x: &Q) -> Value {
    let part = |n: &num_bigint::BigInt| n.to_i64().map(Value::from).unwrap_or_else(|| Value::from(n.to_string()));
    json!([part(x.numer()), part(x.denom())])
}

/// `ev_a^* V(λ)`: `x ⊗ t^r` acts as `a^r x`.
pub fn evaluation_module(alg: &LieAlgebra, v: &Irrep, a: &Q) -> Result<LoopModule, ModuleError> {
    if a.is_zero() {
        return Err(ModuleError::ZeroPoint);
    }
    Ok(evaluation_module_from_matrices(v.lie_type(), v.weights().to_vec(), &alg.realize(v), a))
}

/// Evaluation at `a` of a `g`-module given by its basis-element matrices.
pub fn evaluation_module_from_matrices(lie_type: LieType, weights: Vec<Weight>, rho: &[SparseMatrix], a: &Q) -> LoopModule {
    let term = JetTerm { point: a.clone(), kind: JetKind::Value, mats: rho.to_vec() };
    LoopModule::new(lie_type, weights, vec![term])
}

/// `V(λ) ⊕ V(μ)` with `x t^r (v, w) = (a^r x v, a^r x w + r a^{r−1} p(x ⊗ v))`.
#[derive(Debug, Clone)]
pub struct ExtensionModule {
    pub point: Q,
    pub projection: Projection,
    rho_lambda: Vec<SparseMatrix>,
    rho_mu: Vec<SparseMatrix>,
    module: LoopModule,
}

impl ExtensionModule {
    /// Build `V(λ, μ, a)`; `p` must be nonzero and equivariant.
    pub fn new(alg: &LieAlgebra, lambda: &Irrep, mu: &Irrep, a: &Q, p: &Projection) -> Result<Self, ModuleError> {
        if p.is_zero() {
            return Err(ModuleError::HomVanishes { lambda: lambda.highest().to_string(), mu: mu.highest().to_string() });
        }
        Self::from_parts(alg, lambda, mu, a, p)
    }

    /// Same formula, allowing `p = 0` (which gives the direct sum).
    pub fn from_parts(alg: &LieAlgebra, lambda: &Irrep, mu: &Irrep, a: &Q, p: &Projection) -> Result<Self, ModuleError> {
        if a.is_zero() {
            return Err(ModuleError::ZeroPoint);
        }
        let rho_lambda = alg.realize(lambda);
        let rho_mu = alg.realize(mu);
        if p.maps.len() != alg.dim() || !p.is_equivariant(alg, &rho_lambda, &rho_mu) {
            return Err(ModuleError::NotEquivariant);
        }
        let (dl, dm) = (lambda.dim(), mu.dim());
        let d = dl + dm;
        let value = (0..alg.dim())
            .map(|x| {
                let mut m = SparseMatrix::zeros(d, d);
                m.place(0, 0, &rho_lambda[x]);
                m.place(dl, dl, &rho_mu[x]);
                m
            })
            .collect();
        let derivative = p
            .maps
            .iter()
            .map(|px| {
                let mut m = SparseMatrix::zeros(d, d);
                m.place(dl, 0, px);
                m
            })
            .collect();
        let weights = lambda.weights().iter().chain(mu.weights()).cloned().collect();
        let module = LoopModule::new(
            lambda.lie_type(),
            weights,
            vec![
                JetTerm { point: a.clone(), kind: JetKind::Value, mats: value },
                JetTerm { point: a.clone(), kind: JetKind::Derivative, mats: derivative },
            ],
        );
        Ok(ExtensionModule { point: a.clone(), projection: p.clone(), rho_lambda, rho_mu, module })
    }

    pub fn module(&self) -> &LoopModule {
        &self.module
    }

    pub fn dim_lambda(&self) -> usize {
        self.rho_lambda[0].nrows()
    }

    pub fn dim_mu(&self) -> usize {
        self.rho_mu[0].nrows()
    }

    pub fn rho_lambda(&self) -> &[SparseMatrix] {
        &self.rho_lambda
    }

    pub fn rho_mu(&self) -> &[SparseMatrix] {
        &self.rho_mu
    }

    /// For every generator `x`: `x ⊗ f` acts as `f(a)·(x on V(λ) ⊕ V(μ))`
    /// plus `f′(a)·p(x ⊗ −)`, i.e. only the first-order jet of `f` at `a`
    /// matters.
    pub fn jet_annihilator_check(&self, alg: &LieAlgebra, f: &LaurentPoly) -> bool {
        let (dl, dm) = (self.dim_lambda(), self.dim_mu());
        let d = dl + dm;
        let (fa, dfa) = (f.eval(&self.point), f.derivative_at(&self.point));
        alg.generators().into_iter().all(|g| {
            let x = alg.index(g);
            let mut expect = SparseMatrix::zeros(d, d);
            expect.place(0, 0, &self.rho_lambda[x].scale(&fa));
            expect.place(dl, dl, &self.rho_mu[x].scale(&fa));
            expect.place(dl, 0, &self.projection.maps[x].scale(&dfa));
            self.module.action_poly(x, f) == expect
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;
    use crate::loop_modules::irrep::build_irrep;
    use crate::loop_modules::projection::equivariant_projection;
    use crate::rootsys::RootSystem;

    fn setup() -> (RootSystem, LieAlgebra) {
        let rs = RootSystem::build("A1".parse().unwrap());
        let alg = LieAlgebra::new(&rs).unwrap();
        (rs, alg)
    }

    #[test]
    fn evaluation_examples() {
        let (rs, alg) = setup();
        let v = build_irrep(&rs, &Weight(vec![1])).unwrap();
        let h = alg.index(Generator::Cartan(1));
        let one = evaluation_module(&alg, &v, &q(1)).unwrap();
        for r in -2..=2 {
            assert_eq!(one.action(h, r), v.h(1).clone());
        }
        let two = evaluation_module(&alg, &v, &q(2)).unwrap();
        let ht = two.action(h, 1);
        assert_eq!((ht.get(0, 0), ht.get(1, 1)), (q(2), q(-2)));
        let minus = evaluation_module(&alg, &v, &q(-1)).unwrap();
        let e = alg.index(Generator::Raise(1));
        assert_eq!(minus.action(e, 2), v.e(1).clone());
        assert!(evaluation_module(&alg, &v, &q(0)).is_err());
        assert!(two.lie_action_holds(&alg));
    }

    #[test]
    fn extension_examples() {
        let (rs, alg) = setup();
        let v = |m: i64| build_irrep(&rs, &Weight(vec![m])).unwrap();
        let (l, m) = (v(2), v(2));
        let p = equivariant_projection(&alg, &l, &m).unwrap();
        let ext = ExtensionModule::new(&alg, &l, &m, &q(1), &p).unwrap();
        assert_eq!(ext.module().dim(), 6);
        assert!(ext.module().lie_action_holds(&alg));

        let (l, m) = (v(3), v(1));
        let p = equivariant_projection(&alg, &l, &m).unwrap();
        let ext = ExtensionModule::new(&alg, &l, &m, &q(2), &p).unwrap();
        assert_eq!(ext.module().dim(), 6);
        assert!(ext.module().lie_action_holds(&alg));
        // V(μ) summand is a submodule: upper-right block vanishes
        for x in 0..alg.dim() {
            for r in -2..=2 {
                assert!(ext.module().action(x, r).block(0, 4, 4, 2).is_zero());
            }
        }
        assert!(ExtensionModule::new(&alg, &l, &m, &q(2), &Projection::zero(&alg, &l, &m)).is_err());
        let zero = ExtensionModule::from_parts(&alg, &l, &m, &q(2), &Projection::zero(&alg, &l, &m)).unwrap();
        assert!(zero.module().lie_action_holds(&alg));
    }

    #[test]
    fn scaling_p_gives_isomorphic_module() {
        let (rs, alg) = setup();
        let (l, m) = (build_irrep(&rs, &Weight(vec![3])).unwrap(), build_irrep(&rs, &Weight(vec![1])).unwrap());
        let p = equivariant_projection(&alg, &l, &m).unwrap();
        let c = q_frac(-5, 3);
        let a = q(2);
        let e1 = ExtensionModule::new(&alg, &l, &m, &a, &p).unwrap();
        let e2 = ExtensionModule::new(&alg, &l, &m, &a, &p.scaled(&c)).unwrap();
        // T = diag(1, c) on V(λ) ⊕ V(μ) intertwines e1 and e2
        let mut t = SparseMatrix::identity(6);
        for k in 4..6 {
            t.set(k, k, c.clone());
        }
        for x in 0..alg.dim() {
            for r in -2..=2 {
                assert_eq!(t.mul(&e1.module().action(x, r)), e2.module().action(x, r).mul(&t));
            }
        }
    }

    #[test]
    fn jets() {
        let (rs, alg) = setup();
        let (l, m) = (build_irrep(&rs, &Weight(vec![3])).unwrap(), build_irrep(&rs, &Weight(vec![1])).unwrap());
        let p = equivariant_projection(&alg, &l, &m).unwrap();
        let a = q_frac(3, 2);
        let ext = ExtensionModule::new(&alg, &l, &m, &a, &p).unwrap();
        let sq = LaurentPoly::t_minus(&a).pow(2);
        assert!(ext.jet_annihilator_check(&alg, &sq));
        for k in -2..=2 {
            let f = sq.mul(&LaurentPoly::monomial(k, q(1)));
            for x in 0..alg.dim() {
                assert!(ext.module().action_poly(x, &f).is_zero());
            }
        }
        assert!(ext.jet_annihilator_check(&alg, &LaurentPoly::one()));
        assert!(ext.jet_annihilator_check(&alg, &LaurentPoly::monomial(-3, q(7))));
        let ev = evaluation_module(&alg, &l, &a).unwrap();
        let e = alg.index(Generator::Raise(1));
        assert_eq!(ev.action_poly(e, &LaurentPoly::monomial(1, q(1))), l.e(1).scale(&a));
    }
}
