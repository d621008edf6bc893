//! Decision procedures on concrete modules: splitting of extensions,
//! irreducibility, and spectral characters read off the `h ⊗ t^k` action.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lie::LieAlgebra;
use super::module::{evaluation_module_from_matrices, ExtensionModule, LoopModule};
use super::ModuleError;
use crate::drinfeld::{SpectralCharacter, SpectralPoint};
use crate::gamma::GammaGroup;
use crate::linalg::{nullspace, q, q_pow, solve, SparseMatrix, SparseSpan, Span, Q};
use crate::rootsys::Weight;

/// Whether the `V(μ)` summand has no `L(g)`-invariant complement.
///
/// Every vector-space complement is the graph of some `φ: V(λ) → V(μ)`, and
/// the graph is invariant iff
/// `a^r (ρ_μ(x) φ − φ ρ_λ(x)) = −r a^{r−1} p(x ⊗ −)` for all `x`, `r`.
/// The `h ⊗ t^0` equations force `φ` to preserve weights, so only those
/// entries are unknowns. Generators with `r ∈ {−1, 0, 1}` are used.
pub fn is_nonsplit(alg: &LieAlgebra, ext: &ExtensionModule) -> bool {
    let wl = &ext.module().weights()[..ext.dim_lambda()];
    let wm = &ext.module().weights()[ext.dim_lambda()..];
    let mut unknowns: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, w) in wm.iter().enumerate() {
        for (b, v) in wl.iter().enumerate() {
            if w == v {
                let next = unknowns.len();
                unknowns.insert((k, b), next);
            }
        }
    }
    let constant = unknowns.len();
    let mut by_col_mu: Vec<Vec<(usize, usize)>> = vec![Vec::new(); wm.len()];
    let mut by_row_lambda: Vec<Vec<(usize, usize)>> = vec![Vec::new(); wm.len()];
    for (&(k, b), &u) in &unknowns {
        by_col_mu[k].push((b, u));
        by_row_lambda[k].push((b, u));
    }
    let mut span = SparseSpan::new();
    for r in [0i64, 1, -1] {
        let ar = q_pow(&ext.point, r);
        let dr = if r == 0 { Q::zero() } else { q(r) * q_pow(&ext.point, r - 1) };
        for g in alg.generators() {
            let x = alg.index(g);
            let rm_t = ext.rho_mu()[x].transpose();
            let rl = &ext.rho_lambda()[x];
            let mut rows: BTreeMap<(usize, usize), BTreeMap<usize, Q>> = BTreeMap::new();
            // ρ_μ(x) φ: unknown (l, b) feeds equation (k, b) with ρ_μ(x)[k, l]
            for (l, entries) in by_col_mu.iter().enumerate() {
                for &(b, u) in entries {
                    for (k, val) in rm_t.row(l) {
                        *rows.entry((k, b)).or_default().entry(u).or_insert_with(Q::zero) += &ar * val;
                    }
                }
            }
            // − φ ρ_λ(x): unknown (k, l) feeds equation (k, b) with ρ_λ(x)[l, b]
            for (k, entries) in by_row_lambda.iter().enumerate() {
                for &(l, u) in entries {
                    for (b, val) in rl.row(l) {
                        *rows.entry((k, b)).or_default().entry(u).or_insert_with(Q::zero) -= &ar * val;
                    }
                }
            }
            if !dr.is_zero() {
                for (k, b, val) in ext.projection.maps[x].entries() {
                    *rows.entry((k, b)).or_default().entry(constant).or_insert_with(Q::zero) += &dr * val;
                }
            }
            for row in rows.values() {
                if span.insert(row) == Some(constant) {
                    return true;
                }
            }
        }
    }
    false
}

/// `0 → V(π_{μ,a}) → V(λ, μ, a) → V(π_{λ,a}) → 0` on the nose: the `V(μ)`
/// summand is invariant and carries the evaluation action at `a`, and the
/// induced action on the quotient is the evaluation action of `V(λ)` at `a`.
pub fn quotient_is_evaluation(alg: &LieAlgebra, ext: &ExtensionModule) -> bool {
    let (dl, dm) = (ext.dim_lambda(), ext.dim_mu());
    let top = evaluation_module_from_matrices(ext.module().lie_type(), ext.module().weights()[..dl].to_vec(), ext.rho_lambda(), &ext.point);
    let bottom = evaluation_module_from_matrices(ext.module().lie_type(), ext.module().weights()[dl..].to_vec(), ext.rho_mu(), &ext.point);
    (0..alg.dim()).all(|x| {
        (-2..=2).all(|r| {
            let a = ext.module().action(x, r);
            a.block(0, dl, dl, dm).is_zero()
                && a.block(dl, dl, dm, dm) == bottom.action(x, r)
                && a.block(0, 0, dl, dl) == top.action(x, r)
        })
    })
}

/// Outcome of an irreducibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    /// Proven: exact Norton-type certificate or full matrix algebra.
    Irreducible,
    /// Randomized search found no invariant subspace.
    ProbablyIrreducible,
    /// A proper nonzero invariant subspace, when one was exhibited.
    Reducible { witness: Option<Vec<Vec<Q>>> },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        !matches!(self, Irreducibility::Reducible { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Irreducibility::Irreducible => "irreducible",
            Irreducibility::ProbablyIrreducible => "probably irreducible",
            Irreducibility::Reducible { witness: Some(_) } => "definitely reducible (witness submodule)",
            Irreducibility::Reducible { witness: None } => "definitely reducible",
        }
    }
}

/// Matrices generating the associative algebra of the action: every jet
/// term of every Chevalley generator. The span of `x ⊗ t^r` over `r` is the
/// span of these terms, since the functions `r ↦ a^r` and `r ↦ r a^{r−1}`
/// for distinct points are linearly independent.
fn action_generators(alg: &LieAlgebra, m: &LoopModule) -> Vec<SparseMatrix> {
    let mut out = Vec::new();
    for g in alg.generators() {
        let x = alg.index(g);
        for t in m.terms() {
            if !t.mats[x].is_zero() {
                out.push(t.mats[x].clone());
            }
        }
    }
    out
}

fn spin(gens: &[SparseMatrix], seeds: &[Vec<Q>], d: usize) -> Span {
    let mut span = Span::new(d);
    let mut queue: Vec<Vec<Q>> = Vec::new();
    for v in seeds {
        if span.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if span.is_full() {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&v);
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    span
}

fn unit(d: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[k] = Q::one();
    v
}

/// Annihilator in `M` of a subspace of `M*`.
fn annihilator(span: &Span) -> Vec<Vec<Q>> {
    nullspace(&span.basis(), span.ambient_dim())
}

/// Exact where possible, randomized (seeded) otherwise.
///
/// With a one-dimensional weight space `M_ν = ⟨u⟩`, the element `P_ν − 1`
/// of the action algebra has one-dimensional kernels on `M` and `M*`; by
/// Norton's criterion `M` is irreducible iff `u` generates `M` and the dual
/// vector generates `M*`. Failing that, modules of dimension at most 12 are
/// decided by Burnside's theorem, and larger ones by spinning random vectors.
pub fn is_irreducible(alg: &LieAlgebra, m: &LoopModule, seed: u64) -> Irreducibility {
    let d = m.dim();
    if d <= 1 {
        return Irreducibility::Irreducible;
    }
    let gens = action_generators(alg, m);
    let duals: Vec<SparseMatrix> = gens.iter().map(SparseMatrix::transpose).collect();
    let mut counts: BTreeMap<&Weight, usize> = BTreeMap::new();
    for w in m.weights() {
        *counts.entry(w).or_insert(0) += 1;
    }
    if let Some(k) = (0..d).find(|&k| counts[&m.weights()[k]] == 1) {
        let s = spin(&gens, &[unit(d, k)], d);
        if !s.is_full() {
            return Irreducibility::Reducible { witness: Some(s.basis()) };
        }
        let s = spin(&duals, &[unit(d, k)], d);
        if !s.is_full() {
            return Irreducibility::Reducible { witness: Some(annihilator(&s)) };
        }
        return Irreducibility::Irreducible;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_witness = |trials: usize| -> Option<Vec<Vec<Q>>> {
        let candidates: Vec<Vec<Q>> = (0..d)
            .map(|k| unit(d, k))
            .chain((0..trials).map(|_| (0..d).map(|_| q(rng.gen_range(-3..=3))).collect()))
            .collect();
        for v in &candidates {
            let s = spin(&gens, std::slice::from_ref(v), d);
            if s.dim() > 0 && !s.is_full() {
                return Some(s.basis());
            }
            let s = spin(&duals, std::slice::from_ref(v), d);
            if s.dim() > 0 && !s.is_full() {
                return Some(annihilator(&s));
            }
        }
        None
    };

    if d <= 12 {
        // Burnside: irreducible over ℂ iff the action spans all of End(M)
        let flat = |a: &SparseMatrix| -> Vec<Q> { (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| a.get(i, j)).collect() };
        let mut algebra = Span::new(d * d);
        let mut queue = vec![SparseMatrix::identity(d)];
        algebra.insert(&flat(&queue[0]));
        while let Some(a) = queue.pop() {
            for g in &gens {
                let b = g.mul(&a);
                if algebra.insert(&flat(&b)) {
                    queue.push(b);
                }
            }
        }
        return if algebra.is_full() {
            Irreducibility::Irreducible
        } else {
            Irreducibility::Reducible { witness: random_witness(16) }
        };
    }
    match random_witness(16) {
        Some(w) => Irreducibility::Reducible { witness: Some(w) },
        None => Irreducibility::ProbablyIrreducible,
    }
}

/// Whether the span of `basis` is invariant under the whole action.
pub fn is_submodule(alg: &LieAlgebra, m: &LoopModule, basis: &[Vec<Q>]) -> bool {
    let mut span = Span::new(m.dim());
    for v in basis {
        span.insert(v);
    }
    action_generators(alg, m)
        .iter()
        .all(|g| basis.iter().all(|v| span.contains(&g.mul_vec(v))))
}

/// Per-point value matrices of `h_i` recovered from `h_i ⊗ t^k`,
/// `k = 0, …, 2P−1`, by inverting the confluent Vandermonde system of the
/// known points.
fn point_cartan_matrices(alg: &LieAlgebra, m: &LoopModule) -> Result<Vec<(Q, Vec<SparseMatrix>)>, ModuleError> {
    let points = m.points();
    let size = 2 * points.len();
    let n = alg.root_system().rank();
    // V[k][2p] = a_p^k, V[k][2p+1] = k a_p^{k−1}
    let vander: Vec<Vec<Q>> = (0..size as i64)
        .map(|k| {
            points
                .iter()
                .flat_map(|a| [q_pow(a, k), if k == 0 { Q::zero() } else { q(k) * q_pow(a, k - 1) }])
                .collect()
        })
        .collect();
    // row 2p of V^{-1}: weights extracting the value part at point p
    let inverse_rows: Vec<Vec<Q>> = (0..points.len())
        .map(|p| {
            // solve Vᵀ y = e_{2p}
            let vt: Vec<Vec<Q>> = (0..size).map(|i| (0..size).map(|j| vander[j][i].clone()).collect()).collect();
            let mut e = vec![Q::zero(); size];
            e[2 * p] = Q::one();
            solve(&vt, &e, size).ok_or_else(|| ModuleError::Construction("singular Vandermonde system".into()))
        })
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (p, a) in points.iter().enumerate() {
        let mats = (1..=n)
            .map(|i| {
                let h = alg.index(super::lie::Generator::Cartan(i));
                let mut y = SparseMatrix::zeros(m.dim(), m.dim());
                for (k, c) in inverse_rows[p].iter().enumerate() {
                    if !c.is_zero() {
                        y.add_scaled(&m.action(h, k as i64), c);
                    }
                }
                y
            })
            .collect();
        out.push((a.clone(), mats));
    }
    Ok(out)
}

fn is_diagonal(m: &SparseMatrix) -> bool {
    m.entries().all(|(i, j, _)| i == j)
}

fn integer(x: &Q) -> Result<i64, ModuleError> {
    if x.is_integer() {
        x.to_integer().to_i64().ok_or(ModuleError::NonIntegralSpectrum)
    } else {
        Err(ModuleError::NonIntegralSpectrum)
    }
}

/// Subspaces (as bases) of the joint generalized eigenspaces of a commuting
/// family, labelled by their integer eigenvalue tuples.
fn joint_eigenspaces(ops: &[SparseMatrix], d: usize) -> Result<Vec<(Vec<i64>, Vec<Vec<Q>>)>, ModuleError> {
    if ops.iter().all(is_diagonal) {
        let mut groups: BTreeMap<Vec<i64>, Vec<Vec<Q>>> = BTreeMap::new();
        for k in 0..d {
            let label = ops.iter().map(|o| integer(&o.get(k, k))).collect::<Result<Vec<_>, _>>()?;
            groups.entry(label).or_default().push(unit(d, k));
        }
        return Ok(groups.into_iter().collect());
    }
    let mut parts: Vec<(Vec<i64>, Vec<Vec<Q>>)> = vec![(Vec::new(), (0..d).map(|k| unit(d, k)).collect())];
    for op in ops {
        let dense = op.to_dense();
        let bound = op.max_abs_row_sum().ceil().to_integer().to_i64().unwrap_or(i64::MAX);
        let mut next = Vec::new();
        for (label, basis) in parts {
            let mut found = 0;
            for c in -bound..=bound {
                // (op − c)^d kills exactly the generalized eigenspace
                let mut shifted = SparseMatrix::from_dense(&dense, d);
                for i in 0..d {
                    shifted.add_at(i, i, &q(-c));
                }
                let mut power = shifted.clone();
                for _ in 1..d.next_power_of_two().trailing_zeros() + 1 {
                    power = power.mul(&power);
                }
                // intersect ker(power) with span(basis)
                let images: Vec<Vec<Q>> = basis.iter().map(|v| power.mul_vec(v)).collect();
                let rows: Vec<Vec<Q>> = (0..d).map(|i| images.iter().map(|v| v[i].clone()).collect()).collect();
                let coeffs = nullspace(&rows, basis.len());
                if coeffs.is_empty() {
                    continue;
                }
                found += coeffs.len();
                let sub: Vec<Vec<Q>> = coeffs
                    .iter()
                    .map(|c| (0..d).map(|i| c.iter().zip(&basis).map(|(x, v)| x * &v[i]).fold(Q::zero(), |s, t| s + t)).collect())
                    .collect();
                let mut l = label.clone();
                l.push(c);
                next.push((l, sub));
            }
            if found != basis.len() {
                return Err(ModuleError::NonIntegralSpectrum);
            }
        }
        parts = next;
    }
    Ok(parts)
}

/// The spectral character of a module, computed from its ℓ-weights: the
/// joint generalized eigenvalues of the per-point `h_i` value matrices.
/// Every ℓ-weight must give the same character.
pub fn spectral_character_of(alg: &LieAlgebra, gamma: &GammaGroup, m: &LoopModule) -> Result<SpectralCharacter, ModuleError> {
    let n = alg.root_system().rank();
    let per_point = point_cartan_matrices(alg, m)?;
    let ops: Vec<SparseMatrix> = per_point.iter().flat_map(|(_, mats)| mats.iter().cloned()).collect();
    let spaces = joint_eigenspaces(&ops, m.dim())?;
    let mut result: Option<(String, SpectralCharacter)> = None;
    for (label, _) in spaces {
        let mut chi = SpectralCharacter::zero();
        let mut desc = Vec::new();
        for (p, (a, _)) in per_point.iter().enumerate() {
            let w = Weight(label[p * n..(p + 1) * n].to_vec());
            desc.push(format!("{a}↦{w}"));
            chi.insert(SpectralPoint::Rational(a.clone()), gamma.project(&w));
        }
        let desc = format!("{{{}}}", desc.join(", "));
        match &result {
            None => result = Some((desc, chi)),
            Some((d0, c0)) if c0 != &chi => return Err(ModuleError::MixedCharacter(d0.clone(), desc)),
            Some(_) => {}
        }
    }
    Ok(result.map(|(_, c)| c).unwrap_or_default())
}

/// Largest absolute entry, for reporting.
pub fn max_abs_entry(m: &SparseMatrix) -> Q {
    m.entries().map(|(_, _, x)| x.abs()).max().unwrap_or_else(Q::zero)
}
