//! A Chevalley-type basis of `g`: root vectors `e_β`, `f_β` for positive
//! roots `β` (iterated brackets of generators), and `h_1, …, h_n`.
//!
//! Structure constants and the invariant (trace) form are read off a
//! faithful irreducible representation.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::irrep::{build_irrep_capped, Irrep};
use super::ModuleError;
use crate::linalg::{coordinates_in, SparseMatrix, Q};
use crate::oracle::weyl_dim_u64;
use crate::rootsys::{RootSystem, Weight};

/// One of the Chevalley generators `x_i^+`, `x_i^−`, `h_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Raise(usize),
    Lower(usize),
    Cartan(usize),
}

impl Generator {
    pub fn name(self) -> String {
        match self {
            Generator::Raise(i) => format!("x{i}+"),
            Generator::Lower(i) => format!("x{i}-"),
            Generator::Cartan(i) => format!("h{i}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    rs: RootSystem,
    /// positive roots in ω-coordinates, ordered by height
    roots: Vec<Weight>,
    /// for non-simple roots: `(i, k)` with `e_β = [e_i, e_{β_k}]`
    words: Vec<Option<(usize, usize)>>,
    /// `structure[a][b]` lists `(c, coefficient)` with `[b_a, b_b] = Σ c b_c`
    structure: Vec<Vec<Vec<(usize, Q)>>>,
    ad: Vec<SparseMatrix>,
    form: Vec<Vec<Q>>,
}

impl LieAlgebra {
    pub fn new(rs: &RootSystem) -> Result<Self, ModuleError> {
        let n = rs.rank();
        let mut order: Vec<usize> = (0..rs.positive_roots().len()).collect();
        order.sort_by_key(|&k| rs.positive_roots()[k].height());
        let roots: Vec<Weight> = order.iter().map(|&k| rs.positive_roots_omega()[k].clone()).collect();
        let index: BTreeMap<Weight, usize> = roots.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let words = roots
            .iter()
            .map(|beta| {
                if (1..=n).any(|i| &rs.simple_root(i) == beta) {
                    None
                } else {
                    (1..=n).find_map(|i| index.get(&beta.sub(&rs.simple_root(i))).map(|&k| (i, k)))
                }
            })
            .collect();
        let mut alg = LieAlgebra { rs: rs.clone(), roots, words, structure: vec![], ad: vec![], form: vec![] };

        // smallest nontrivial fundamental module; faithful since g is simple
        let faithful = (1..=n)
            .map(|i| Weight::fundamental(n, i))
            .min_by_key(|w| weyl_dim_u64(rs, w).unwrap_or(u64::MAX))
            .expect("rank ≥ 1");
        let rep = build_irrep_capped(rs, &faithful, usize::MAX)?;
        let mats = alg.realize(&rep);
        alg.form = mats.iter().map(|x| mats.iter().map(|y| x.mul(y).trace()).collect()).collect();

        let dim = alg.dim();
        let flat = |m: &SparseMatrix| -> BTreeMap<(usize, usize), Q> { m.entries().map(|(i, j, x)| ((i, j), x.clone())).collect() };
        let flats: Vec<_> = mats.iter().map(flat).collect();
        let mut structure = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let br = flat(&mats[a].commutator(&mats[b]));
                if br.is_empty() {
                    continue;
                }
                let wt = alg.basis_weight(a).add(&alg.basis_weight(b));
                let cands: Vec<usize> = (0..dim).filter(|&c| alg.basis_weight(c) == wt).collect();
                let keys: Vec<(usize, usize)> = {
                    let mut ks: Vec<_> = br.keys().copied().chain(cands.iter().flat_map(|&c| flats[c].keys().copied())).collect();
                    ks.sort_unstable();
                    ks.dedup();
                    ks
                };
                let dense = |m: &BTreeMap<(usize, usize), Q>| -> Vec<Q> {
                    keys.iter().map(|k| m.get(k).cloned().unwrap_or_else(Q::zero)).collect()
                };
                let basis: Vec<Vec<Q>> = cands.iter().map(|&c| dense(&flats[c])).collect();
                let coords = coordinates_in(&basis, &dense(&br))
                    .ok_or_else(|| ModuleError::Construction("bracket left the span of the basis".into()))?;
                structure[a][b] = cands.iter().zip(coords).filter(|(_, x)| !x.is_zero()).map(|(&c, x)| (c, x)).collect();
            }
        }
        alg.ad = (0..dim)
            .map(|a| {
                let mut m = SparseMatrix::zeros(dim, dim);
                for (b, row) in structure[a].iter().enumerate() {
                    for (c, x) in row {
                        m.set(*c, b, x.clone());
                    }
                }
                m
            })
            .collect();
        alg.structure = structure;
        Ok(alg)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        2 * self.roots.len() + self.rs.rank()
    }

    fn m(&self) -> usize {
        self.roots.len()
    }

    /// Weight of basis element `a`.
    pub fn basis_weight(&self, a: usize) -> Weight {
        let (m, n) = (self.m(), self.rs.rank());
        if a < m {
            self.roots[a].clone()
        } else if a < m + n {
            Weight::zero(n)
        } else {
            self.roots[a - m - n].neg()
        }
    }

    pub fn basis_name(&self, a: usize) -> String {
        let (m, n) = (self.m(), self.rs.rank());
        if a < m {
            format!("e[{}]", self.roots[a])
        } else if a < m + n {
            format!("h{}", a - m + 1)
        } else {
            format!("f[{}]", self.roots[a - m - n])
        }
    }

    /// Basis index of a generator.
    pub fn index(&self, g: Generator) -> usize {
        let (m, n) = (self.m(), self.rs.rank());
        let simple = |i: usize| {
            let a = self.rs.simple_root(i);
            self.roots.iter().position(|r| r == &a).expect("simple roots are positive roots")
        };
        match g {
            Generator::Raise(i) => simple(i),
            Generator::Cartan(i) => m + i - 1,
            Generator::Lower(i) => m + n + simple(i),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        let n = self.rs.rank();
        (1..=n)
            .flat_map(|i| [Generator::Raise(i), Generator::Lower(i), Generator::Cartan(i)])
            .collect()
    }

    /// `[b_a, b_b]` in the basis.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.structure[a][b]
    }

    /// `ad(b_a)`.
    pub fn ad(&self, a: usize) -> &SparseMatrix {
        &self.ad[a]
    }

    /// Nondegenerate invariant form `tr(ρ(x) ρ(y))` in the faithful module.
    pub fn form(&self, a: usize, b: usize) -> &Q {
        &self.form[a][b]
    }

    /// Matrices of every basis element acting on `V`.
    pub fn realize(&self, v: &Irrep) -> Vec<SparseMatrix> {
        let (m, n) = (self.m(), self.rs.rank());
        let mut e: Vec<SparseMatrix> = Vec::with_capacity(m);
        let mut f: Vec<SparseMatrix> = Vec::with_capacity(m);
        for (k, word) in self.words.iter().enumerate() {
            match word {
                None => {
                    let i = (1..=n).find(|&i| self.rs.simple_root(i) == self.roots[k]).unwrap();
                    e.push(v.e(i).clone());
                    f.push(v.f(i).clone());
                }
                Some((i, p)) => {
                    let (ep, fp) = (e[*p].clone(), f[*p].clone());
                    e.push(v.e(*i).commutator(&ep));
                    f.push(v.f(*i).commutator(&fp));
                }
            }
        }
        e.into_iter().chain((1..=n).map(|i| v.h(i).clone())).chain(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_modules::irrep::build_irrep;
    use crate::linalg::q;

    fn alg(t: &str) -> LieAlgebra {
        LieAlgebra::new(&RootSystem::build(t.parse().unwrap())).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(alg("A1").dim(), 3);
        assert_eq!(alg("A2").dim(), 8);
        assert_eq!(alg("G2").dim(), 14);
        assert_eq!(alg("B3").dim(), 21);
    }

    #[test]
    fn jacobi_and_antisymmetry() {
        for t in ["A2", "G2", "B2"] {
            let g = alg(t);
            let d = g.dim();
            for a in 0..d {
                for b in 0..d {
                    assert_eq!(g.ad(a).commutator(g.ad(b)), lin(&g, g.bracket(a, b)), "{t}");
                    let ab: BTreeMap<usize, Q> = g.bracket(a, b).iter().cloned().collect();
                    let ba: BTreeMap<usize, Q> = g.bracket(b, a).iter().map(|(c, x)| (*c, -x.clone())).collect();
                    assert_eq!(ab, ba);
                }
            }
        }
    }

    fn lin(g: &LieAlgebra, v: &[(usize, Q)]) -> SparseMatrix {
        let d = g.dim();
        let mut m = SparseMatrix::zeros(d, d);
        for (c, x) in v {
            m.add_scaled(g.ad(*c), x);
        }
        m
    }

    #[test]
    fn realizations_are_homomorphisms() {
        let g = alg("A2");
        let rs = g.root_system().clone();
        let v = build_irrep(&rs, &Weight(vec![2, 1])).unwrap();
        let mats = g.realize(&v);
        for a in 0..g.dim() {
            for b in 0..g.dim() {
                let mut expect = SparseMatrix::zeros(v.dim(), v.dim());
                for (c, x) in g.bracket(a, b) {
                    expect.add_scaled(&mats[*c], x);
                }
                assert_eq!(mats[a].commutator(&mats[b]), expect);
            }
        }
    }

    #[test]
    fn form_is_invariant_and_nondegenerate() {
        let g = alg("B2");
        let d = g.dim();
        let rows: Vec<Vec<Q>> = (0..d).map(|a| (0..d).map(|b| g.form(a, b).clone()).collect()).collect();
        assert_eq!(crate::linalg::rank(&rows, d), d);
        for x in 0..d {
            for a in 0..d {
                for b in 0..d {
                    // B([x,a], b) + B(a, [x,b]) = 0
                    let s1: Q = g.bracket(x, a).iter().map(|(c, k)| k * g.form(*c, b)).fold(q(0), |s, t| s + t);
                    let s2: Q = g.bracket(x, b).iter().map(|(c, k)| k * g.form(a, *c)).fold(q(0), |s, t| s + t);
                    assert!((s1 + s2).is_zero());
                }
            }
        }
    }
}
