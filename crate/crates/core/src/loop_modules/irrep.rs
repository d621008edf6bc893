//! Irreducible `g`-modules `V(λ)` as exact rational matrices.
//!
//! The basis is grown from `v_λ` one depth at a time. A candidate vector
//! `f_i w` is identified with the tuple of its images `e_j f_i w`, computed
//! from `e_j f_i w = f_i e_j w + δ_ij λ(h_i) w`. In an irreducible module a
//! vector below the top that every `e_j` kills is zero, so that tuple
//! determines the candidate; independent candidates become new basis vectors.
//! Every basis vector after the first is literally `f_i` applied to an
//! earlier one, which is recorded and reused to build intertwiners.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use super::{dim_cap, ModuleError};
use crate::linalg::{coordinates_in, q, SparseMatrix, Span, Q};
use crate::oracle::weyl_dim;
use crate::rootsys::{LieType, RootSystem, Weight};

type SparseVec = BTreeMap<usize, Q>;

#[derive(Debug, Clone)]
pub struct Irrep {
    lie_type: LieType,
    highest: Weight,
    weights: Vec<Weight>,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
    h: Vec<SparseMatrix>,
    parents: Vec<Option<(usize, usize)>>,
}

impl Irrep {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Weight of each basis vector.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// `x_i^+`, for `i` in `1..=rank`.
    pub fn e(&self, i: usize) -> &SparseMatrix {
        &self.e[i - 1]
    }

    /// `x_i^−`.
    pub fn f(&self, i: usize) -> &SparseMatrix {
        &self.f[i - 1]
    }

    pub fn h(&self, i: usize) -> &SparseMatrix {
        &self.h[i - 1]
    }

    /// `Some((i, w))` when basis vector `b` equals `x_i^− v_w`; `None` for `v_λ`.
    pub fn parent(&self, b: usize) -> Option<(usize, usize)> {
        self.parents[b]
    }

    /// Multiplicity of each weight in this basis.
    pub fn weight_dims(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Check `[h_i, x_j^±] = ±C_ij x_j^±`, `[x_i^+, x_j^−] = δ_ij h_i`,
    /// `[h_i, h_j] = 0` and the Serre relations.
    pub fn chevalley_relations_hold(&self, rs: &RootSystem) -> bool {
        let n = rs.rank();
        let c = rs.cartan();
        let d = self.dim();
        for i in 1..=n {
            for j in 1..=n {
                let cij = q(c[i - 1][j - 1]);
                if self.h(i).commutator(self.e(j)) != self.e(j).scale(&cij)
                    || self.h(i).commutator(self.f(j)) != self.f(j).scale(&-cij)
                    || !self.h(i).commutator(self.h(j)).is_zero()
                {
                    return false;
                }
                let ef = self.e(i).commutator(self.f(j));
                let expect = if i == j { self.h(i).clone() } else { SparseMatrix::zeros(d, d) };
                if ef != expect {
                    return false;
                }
                if i != j {
                    let k = 1 - c[i - 1][j - 1];
                    let (mut up, mut down) = (self.e(j).clone(), self.f(j).clone());
                    for _ in 0..k {
                        up = self.e(i).commutator(&up);
                        down = self.f(i).commutator(&down);
                    }
                    if !up.is_zero() || !down.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn apply_cols(cols: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, x) in v {
        for (r, y) in &cols[*k] {
            let e = out.entry(*r).or_insert_with(Q::zero);
            *e += x * y;
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn cols_to_matrix(cols: &[SparseVec], d: usize) -> SparseMatrix {
    let mut m = SparseMatrix::zeros(d, d);
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in col {
            m.set(*i, j, x.clone());
        }
    }
    m
}

/// Build `V(λ)`, refusing modules larger than the dimension cap.
pub fn build_irrep(rs: &RootSystem, lambda: &Weight) -> Result<Irrep, ModuleError> {
    build_irrep_capped(rs, lambda, dim_cap())
}

pub fn build_irrep_capped(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<Irrep, ModuleError> {
    rs.check_weight(lambda)?;
    let expected = weyl_dim(rs, lambda)?;
    let expected = expected.to_usize().filter(|&d| d <= cap).ok_or(ModuleError::DimCap {
        dim: expected.to_string(),
        cap,
    })?;
    let n = rs.rank();
    let mut weights = vec![lambda.clone()];
    let mut parents = vec![None];
    // Columns: e_cols[j][b] is x_j^+ v_b; f_cols likewise (filled level by level).
    let mut e_cols: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new()]; n];
    let mut f_cols: Vec<Vec<SparseVec>> = vec![Vec::new(); n];
    let mut level: Vec<usize> = vec![0];
    // images only reference vectors of earlier levels, whose indices stay
    // below `expected` while the construction is on track
    let stride = expected + 1;

    while !level.is_empty() {
        // candidates f_i w, grouped by weight
        let mut groups: BTreeMap<Weight, Vec<(usize, usize, SparseVec)>> = BTreeMap::new();
        for &w in &level {
            for i in 0..n {
                let nu = weights[w].sub(&rs.simple_root(i + 1));
                // images e_j (f_i w), keyed by j·D + basis index
                let mut image = SparseVec::new();
                for j in 0..n {
                    let mut v = apply_cols(&f_cols[i], &e_cols[j][w]);
                    if i == j {
                        let c = q(weights[w].0[i]);
                        if !c.is_zero() {
                            let e = v.entry(w).or_insert_with(Q::zero);
                            *e += c;
                        }
                        v.retain(|_, x| !x.is_zero());
                    }
                    for (k, x) in v {
                        image.insert(j * stride + k, x);
                    }
                }
                groups.entry(nu).or_default().push((i, w, image));
            }
        }
        let mut next = Vec::new();
        for (nu, cands) in groups {
            let keys: Vec<usize> = {
                let mut ks: Vec<usize> = cands.iter().flat_map(|(_, _, im)| im.keys().copied()).collect();
                ks.sort_unstable();
                ks.dedup();
                ks
            };
            let dense = |im: &SparseVec| -> Vec<Q> {
                keys.iter().map(|k| im.get(k).cloned().unwrap_or_else(Q::zero)).collect()
            };
            let mut span = Span::new(keys.len());
            let mut chosen: Vec<(usize, Vec<Q>)> = Vec::new();
            for (i, w, im) in &cands {
                let v = dense(im);
                if span.insert(&v) {
                    let b = weights.len();
                    weights.push(nu.clone());
                    parents.push(Some((i + 1, *w)));
                    for j in 0..n {
                        // decode the j-th block of the image
                        let col: SparseVec = im
                            .iter()
                            .filter(|(k, _)| **k / stride == j)
                            .map(|(k, x)| (*k % stride, x.clone()))
                            .collect();
                        e_cols[j].push(col);
                    }
                    chosen.push((b, v));
                    set_col(&mut f_cols[*i], *w, SparseVec::from([(b, q(1))]));
                    next.push(b);
                } else {
                    let basis: Vec<Vec<Q>> = chosen.iter().map(|(_, v)| v.clone()).collect();
                    let coords = coordinates_in(&basis, &v).expect("dependent candidate lies in the span");
                    let col: SparseVec = chosen
                        .iter()
                        .zip(coords)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|((b, _), c)| (*b, c))
                        .collect();
                    set_col(&mut f_cols[*i], *w, col);
                }
            }
        }
        level = next;
        if weights.len() > expected {
            break;
        }
    }
    let d = weights.len();
    if d != expected {
        return Err(ModuleError::Construction(format!(
            "lowering produced {d} vectors for V({lambda}), expected {expected}"
        )));
    }
    for cols in f_cols.iter_mut() {
        cols.resize(d, SparseVec::new());
    }
    let h = (0..n)
        .map(|i| {
            let mut m = SparseMatrix::zeros(d, d);
            for (b, w) in weights.iter().enumerate() {
                m.set(b, b, q(w.0[i]));
            }
            m
        })
        .collect();
    Ok(Irrep {
        lie_type: rs.lie_type(),
        highest: lambda.clone(),
        e: e_cols.iter().map(|c| cols_to_matrix(c, d)).collect(),
        f: f_cols.iter().map(|c| cols_to_matrix(c, d)).collect(),
        h,
        weights,
        parents,
    })
}

fn set_col(cols: &mut Vec<SparseVec>, w: usize, col: SparseVec) {
    if cols.len() <= w {
        cols.resize(w + 1, SparseVec::new());
    }
    cols[w] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::weight_multiplicities;

    fn rs(t: &str) -> RootSystem {
        RootSystem::build(t.parse().unwrap())
    }

    #[test]
    fn sl2_spin_one() {
        let a1 = rs("A1");
        let v = build_irrep(&a1, &Weight(vec![2])).unwrap();
        assert_eq!(v.dim(), 3);
        assert!(v.chevalley_relations_hold(&a1));
        let diag: Vec<i64> = v.weights().iter().map(|w| w.0[0]).collect();
        assert_eq!(diag, vec![2, 0, -2]);
        let triv = build_irrep(&a1, &Weight(vec![0])).unwrap();
        assert_eq!(triv.dim(), 1);
        assert!(triv.e(1).is_zero() && triv.f(1).is_zero() && triv.h(1).is_zero());
    }

    #[test]
    fn weight_spaces_match_freudenthal() {
        for (t, w) in [("A2", vec![1, 0]), ("A2", vec![1, 1]), ("A2", vec![2, 1]), ("B2", vec![1, 1]), ("G2", vec![1, 0]), ("C3", vec![0, 1, 0]), ("A3", vec![1, 0, 1])] {
            let r = rs(t);
            let lam = Weight(w);
            let v = build_irrep(&r, &lam).unwrap();
            assert!(v.chevalley_relations_hold(&r), "{t} {lam}");
            let ws = weight_multiplicities(&r, &lam).unwrap().all_weights(&r);
            let got = v.weight_dims();
            assert_eq!(got.len(), ws.len());
            for (mu, m) in ws {
                assert_eq!(got[&mu] as u64, m, "{t} {lam} at {mu}");
            }
        }
    }

    #[test]
    fn parents_are_lowering_words() {
        let r = rs("A2");
        let v = build_irrep(&r, &Weight(vec![1, 1])).unwrap();
        for b in 1..v.dim() {
            let (i, w) = v.parent(b).unwrap();
            let mut unit = vec![Q::zero(); v.dim()];
            unit[w] = q(1);
            let img = v.f(i).mul_vec(&unit);
            assert!(img.iter().enumerate().all(|(k, x)| if k == b { *x == q(1) } else { x.is_zero() }));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let r = rs("A2");
        assert!(matches!(build_irrep_capped(&r, &Weight(vec![3, 3]), 63), Err(ModuleError::DimCap { .. })));
        assert_eq!(build_irrep_capped(&r, &Weight(vec![3, 3]), 64).unwrap().dim(), 64);
    }
}
