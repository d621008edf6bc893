//! The finite abelian group `Γ = P/Q`, computed from the Smith normal form of
//! the Cartan matrix.

use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::rootsys::{RootSystem, Weight};

/// Smith normal form `U·A·V = diag(d_1, …, d_n)` with `d_i | d_{i+1}`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: Vec<Vec<i64>>,
    pub right: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn row_axpy(m: &mut [Vec<i64>], dst: usize, src: usize, c: i64) {
    if c == 0 {
        return;
    }
    let src_row = m[src].clone();
    for (x, y) in m[dst].iter_mut().zip(src_row) {
        *x += c * y;
    }
}

fn col_axpy(m: &mut [Vec<i64>], dst: usize, src: usize, c: i64) {
    if c == 0 {
        return;
    }
    for row in m.iter_mut() {
        row[dst] += c * row[src];
    }
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith normal form of a square integer matrix, tracking both transforms.
pub fn smith_normal_form(a: &[Vec<i64>]) -> SmithForm {
    let n = a.len();
    let mut d = a.to_vec();
    let mut u = identity(n);
    let mut v = identity(n);

    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| d[i][j] != 0)
                .min_by_key(|&(i, j)| d[i][j].abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..n {
                let c = d[i][t] / d[t][t];
                row_axpy(&mut d, i, t, -c);
                row_axpy(&mut u, i, t, -c);
                clean &= d[i][t] == 0;
            }
            for j in t + 1..n {
                let c = d[t][j] / d[t][t];
                col_axpy(&mut d, j, t, -c);
                col_axpy(&mut v, j, t, -c);
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offender = (t + 1..n).find(|&i| (t + 1..n).any(|j| d[i][j] % d[t][t] != 0));
            match offender {
                Some(i) => {
                    row_axpy(&mut d, t, i, 1);
                    row_axpy(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    SmithForm { diagonal: (0..n).map(|i| d[i][i]).collect(), left: u, right: v }
}

/// `Γ = P/Q` in Smith coordinates.
#[derive(Debug, Clone)]
pub struct GammaGroup {
    invariant_factors: Vec<i64>,
    /// Rows of the left Smith transform for the nontrivial factors.
    transform: Vec<Vec<i64>>,
}

/// An element of `Γ`: residues modulo the nontrivial invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GammaElement {
    pub residues: Vec<i64>,
    pub invariant_factors: Vec<i64>,
}

impl GammaElement {
    pub fn identity(factors: &[i64]) -> Self {
        GammaElement { residues: vec![0; factors.len()], invariant_factors: factors.to_vec() }
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    fn normalized(residues: Vec<i64>, factors: &[i64]) -> Self {
        let residues = residues.iter().zip(factors).map(|(r, d)| r.rem_euclid(*d)).collect();
        GammaElement { residues, invariant_factors: factors.to_vec() }
    }
}

impl Add for &GammaElement {
    type Output = GammaElement;

    fn add(self, other: &GammaElement) -> GammaElement {
        assert_eq!(self.invariant_factors, other.invariant_factors, "elements of different groups");
        GammaElement::normalized(
            self.residues.iter().zip(&other.residues).map(|(a, b)| a + b).collect(),
            &self.invariant_factors,
        )
    }
}

impl Neg for &GammaElement {
    type Output = GammaElement;

    fn neg(self) -> GammaElement {
        GammaElement::normalized(self.residues.iter().map(|a| -a).collect(), &self.invariant_factors)
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (r, d)) in self.residues.iter().zip(&self.invariant_factors).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r} mod {d}")?;
        }
        write!(f, ")")
    }
}

impl GammaGroup {
    pub fn new(rs: &RootSystem) -> GammaGroup {
        let snf = smith_normal_form(rs.cartan());
        let mut invariant_factors = Vec::new();
        let mut transform = Vec::new();
        for (i, &d) in snf.diagonal.iter().enumerate() {
            if d > 1 {
                invariant_factors.push(d);
                transform.push(snf.left[i].clone());
            }
        }
        // A cyclic Γ is generated by the class of the first shaded ω; rescale
        // by a unit so that class is 1, giving the familiar labelling ω_k ↦ k
        // in type A.
        if let ([d], [row]) = (invariant_factors.as_slice(), transform.as_mut_slice()) {
            let first = rs.shaded_nodes()[0];
            let r = row[first - 1].rem_euclid(*d);
            let inv = (1..*d).find(|u| (u * r) % d == 1).expect("shaded ω generates Γ");
            row.iter_mut().for_each(|x| *x = (*x * inv).rem_euclid(*d));
        }
        GammaGroup { invariant_factors, transform }
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> i64 {
        self.invariant_factors.iter().product()
    }

    /// `"Z4"`, `"Z2xZ2"`, or `"0"` for the trivial group.
    pub fn name(&self) -> String {
        if self.invariant_factors.is_empty() {
            "0".to_string()
        } else {
            self.invariant_factors.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join("x")
        }
    }

    pub fn identity(&self) -> GammaElement {
        GammaElement::identity(&self.invariant_factors)
    }

    /// Image `λ̄` of a weight in `Γ`.
    pub fn project(&self, lambda: &Weight) -> GammaElement {
        let residues = self
            .transform
            .iter()
            .map(|row| row.iter().zip(&lambda.0).map(|(a, b)| a * b).sum())
            .collect();
        GammaElement::normalized(residues, &self.invariant_factors)
    }

    /// Every element of `Γ`, in lexicographic residue order.
    pub fn elements(&self) -> Vec<GammaElement> {
        let mut out = vec![self.identity()];
        for (k, &d) in self.invariant_factors.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |r| {
                        let mut e = e.clone();
                        e.residues[k] = r;
                        e
                    })
                })
                .collect();
        }
        out
    }

    /// The minimal representative `λ_γ` supported on the shaded nodes:
    /// smallest coefficient sum, ties broken lexicographically in node order.
    pub fn lambda_gamma(&self, rs: &RootSystem, gamma: &GammaElement) -> Weight {
        let shaded = rs.shaded_nodes();
        let bound = self.order();
        let mut best: Option<(i64, Vec<i64>)> = None;
        let mut coeffs = vec![0i64; shaded.len()];
        loop {
            let mut w = Weight::zero(rs.rank());
            for (&node, &c) in shaded.iter().zip(&coeffs) {
                w.0[node - 1] = c;
            }
            if &self.project(&w) == gamma {
                let key = (coeffs.iter().sum::<i64>(), coeffs.clone());
                if best.as_ref().map_or(true, |b| key < *b) {
                    best = Some(key);
                }
            }
            // odometer over [0, bound)^|shaded|
            let mut k = 0;
            while k < coeffs.len() {
                coeffs[k] += 1;
                if coeffs[k] < bound {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
            if k == coeffs.len() {
                break;
            }
        }
        let (_, coeffs) = best.expect("shaded fundamental weights generate Γ");
        let mut w = Weight::zero(rs.rank());
        for (&node, &c) in shaded.iter().zip(&coeffs) {
            w.0[node - 1] = c;
        }
        w
    }

    /// Closure of the classes of the shaded fundamental weights under addition.
    pub fn generated_by_shaded(&self, rs: &RootSystem) -> Vec<GammaElement> {
        let gens: Vec<GammaElement> =
            rs.shaded_nodes().iter().map(|&i| self.project(&Weight::fundamental(rs.rank(), i))).collect();
        let mut seen = vec![self.identity()];
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                for g in &gens {
                    let s = e + g;
                    if !seen.contains(&s) {
                        seen.push(s.clone());
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        seen.sort();
        seen
    }
}
