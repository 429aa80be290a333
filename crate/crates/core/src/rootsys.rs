//! Root-system data for the classical families A, B, C, D.
//!
//! Everything is exact: coroots and fundamental weights are rational vectors
//! in an orthonormal e-basis (dimension rank+1 for type A, rank otherwise),
//! and the linear forms attached to positive coroots are integer vectors.
//!
//! # Canonical root order
//!
//! Positive coroots are stored sorted by (height, subtype, index pair), where
//! height is the coefficient sum over simple coroots and the subtype ranks
//! are: differences e_i - e_j first, then doubled/single basis coroots
//! (2e_j for B, e_j for C), then sums e_i + e_j. This reproduces the variable
//! order of the printed zeta-function definitions:
//!
//! | type | forms in order |
//! |------|----------------|
//! | A_r  | m_i + ... + m_{j-1}, by length then start index |
//! | B_2  | m1, m2, m1+m2, 2m1+m2 |
//! | B_3  | m1, m2, m3, m1+m2, m2+m3, 2m2+m3, m1+m2+m3, m1+2m2+m3, 2m1+2m2+m3 |
//! | C_2  | m1, m2, m1+m2, m1+2m2 |
//! | D_3  | m1, m2, m3, m1+m2, m1+m3, m1+m2+m3 |

use rug::Rational;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
    C,
    D,
}

impl Kind {
    pub fn min_rank(self) -> usize {
        match self {
            Kind::A => 1,
            Kind::B | Kind::C => 2,
            Kind::D => 3,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::C => 'C',
            Kind::D => 'D',
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = RootSystemError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            other => Err(RootSystemError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(thiserror::Error, Debug)]
pub enum RootSystemError {
    #[error("unknown root-system kind '{0}' (expected A, B, C or D)")]
    UnknownKind(String),
    #[error("rank {rank} is not supported for type {kind:?} (minimum {min})")]
    UnsupportedRank { kind: Kind, rank: usize, min: usize },
    #[error("index {index} is out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("root #{root} is not in the reduced set for excluded index {k} (its k-th weight is 0)")]
    NotInDeltaStar { root: usize, k: usize },
    #[error("weight vector must assign m_i >= 1 exactly to the indices of I")]
    BadWeightVector,
}

/// A positive-coroot record: the coroot in the e-basis and its pairings with
/// the fundamental weights (equivalently, its coefficients over the simple
/// coroots, equivalently the integer linear form L(m)).
#[derive(Clone, Debug, PartialEq)]
pub struct PositiveRoot {
    pub coroot: Vec<Rational>,
    /// c_l = <coroot, lambda_l>; the linear form is L(m) = sum_l c_l m_l.
    pub form: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: Kind,
    pub rank: usize,
    /// Dimension of the ambient e-basis (rank+1 for A, rank otherwise).
    pub dim: usize,
    pub positive: Vec<PositiveRoot>,
    /// Indices into `positive` of the simple coroots alpha_1..alpha_r.
    pub simple: Vec<usize>,
    pub fundamental_weights: Vec<Vec<Rational>>,
}

fn rat(n: i64) -> Rational {
    Rational::from(n)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::new();
    for (x, y) in a.iter().zip(b) {
        acc += Rational::from(x * y);
    }
    acc
}

/// Build all positive coroots of the given type in the e-basis, together
/// with a subtype rank used by the canonical order (0 = difference,
/// 1 = basis/doubled-basis, 2 = sum).
fn raw_coroots(kind: Kind, rank: usize, dim: usize) -> Vec<(Vec<Rational>, u8, (usize, usize))> {
    let mut out = Vec::new();
    let e = |i: usize, v: i64, j: usize, w: i64| -> Vec<Rational> {
        let mut x = vec![Rational::new(); dim];
        x[i] = rat(v);
        if j != i {
            x[j] = rat(w);
        }
        x
    };
    match kind {
        Kind::A => {
            for i in 0..=rank {
                for j in i + 1..=rank {
                    out.push((e(i, 1, j, -1), 0, (i, j)));
                }
            }
        }
        Kind::B => {
            for i in 0..rank {
                for j in i + 1..rank {
                    out.push((e(i, 1, j, -1), 0, (i, j)));
                    out.push((e(i, 1, j, 1), 2, (i, j)));
                }
            }
            for j in 0..rank {
                out.push((e(j, 2, j, 0), 1, (j, j)));
            }
        }
        Kind::C => {
            for i in 0..rank {
                for j in i + 1..rank {
                    out.push((e(i, 1, j, -1), 0, (i, j)));
                    out.push((e(i, 1, j, 1), 2, (i, j)));
                }
            }
            for j in 0..rank {
                out.push((e(j, 1, j, 0), 1, (j, j)));
            }
        }
        Kind::D => {
            for i in 0..rank {
                for j in i + 1..rank {
                    out.push((e(i, 1, j, -1), 0, (i, j)));
                    out.push((e(i, 1, j, 1), 1, (i, j)));
                }
            }
        }
    }
    out
}

fn fundamental_weights(kind: Kind, rank: usize, dim: usize) -> Vec<Vec<Rational>> {
    let mut lams = Vec::with_capacity(rank);
    match kind {
        Kind::A => {
            // lambda_i = e_1+..+e_i - i/(rank+1) (e_1+..+e_{rank+1})
            for i in 1..=rank {
                let frac = Rational::from((i as i64, (rank + 1) as i64));
                let v: Vec<Rational> = (0..dim)
                    .map(|j| {
                        let mut x = if j < i { rat(1) } else { rat(0) };
                        x -= frac.clone();
                        x
                    })
                    .collect();
                lams.push(v);
            }
        }
        Kind::B => {
            for i in 1..rank {
                lams.push((0..dim).map(|j| rat((j < i) as i64)).collect());
            }
            lams.push(vec![Rational::from((1, 2)); dim]);
        }
        Kind::C => {
            for i in 1..=rank {
                lams.push((0..dim).map(|j| rat((j < i) as i64)).collect());
            }
        }
        Kind::D => {
            for i in 1..=rank - 2 {
                lams.push((0..dim).map(|j| rat((j < i) as i64)).collect());
            }
            let mut spin_minus = vec![Rational::from((1, 2)); dim];
            spin_minus[dim - 1] = Rational::from((-1, 2));
            lams.push(spin_minus);
            lams.push(vec![Rational::from((1, 2)); dim]);
        }
    }
    lams
}

/// Construct the root system for (kind, rank).
pub fn build_root_system(kind: Kind, rank: usize) -> Result<RootSystem, RootSystemError> {
    if rank < kind.min_rank() {
        return Err(RootSystemError::UnsupportedRank {
            kind,
            rank,
            min: kind.min_rank(),
        });
    }
    let dim = if kind == Kind::A { rank + 1 } else { rank };
    let lams = fundamental_weights(kind, rank, dim);
    let mut roots: Vec<(PositiveRoot, u8, (usize, usize))> = raw_coroots(kind, rank, dim)
        .into_iter()
        .map(|(coroot, subtype, ij)| {
            let form: Vec<i64> = lams
                .iter()
                .map(|lam| {
                    let p = dot(&coroot, lam);
                    debug_assert!(p.is_integer(), "non-integral pairing");
                    p.numer().to_i64().expect("pairing fits in i64")
                })
                .collect();
            (PositiveRoot { coroot, form }, subtype, ij)
        })
        .collect();
    roots.sort_by_key(|(root, subtype, ij)| {
        let height: i64 = root.form.iter().sum();
        (height, *subtype, ij.0, ij.1)
    });
    let positive: Vec<PositiveRoot> = roots.into_iter().map(|(r, _, _)| r).collect();

    // locate the simple coroots: the forms equal to a standard basis vector
    let mut simple = vec![usize::MAX; rank];
    for (idx, root) in positive.iter().enumerate() {
        if root.form.iter().sum::<i64>() == 1 {
            let l = root.form.iter().position(|&c| c == 1).unwrap();
            simple[l] = idx;
        }
    }
    debug_assert!(simple.iter().all(|&s| s != usize::MAX));

    Ok(RootSystem {
        kind,
        rank,
        dim,
        positive,
        simple,
        fundamental_weights: lams,
    })
}

impl RootSystem {
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// The integer linear forms in canonical order.
    pub fn linear_forms(&self) -> Vec<Vec<i64>> {
        self.positive.iter().map(|r| r.form.clone()).collect()
    }

    /// Human-readable name of a form, e.g. "m1+2m2+m3".
    pub fn form_name(&self, idx: usize) -> String {
        let mut s = String::new();
        for (l, &c) in self.positive[idx].form.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if c != 1 {
                s.push_str(&c.to_string());
            }
            s.push_str(&format!("m{}", l + 1));
        }
        s
    }
}

/// Subset I of {1..r} with a single excluded index k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetSpec {
    pub rank: usize,
    /// 1-based excluded index.
    pub excluded: usize,
}

impl SubsetSpec {
    pub fn excluding(rank: usize, k: usize) -> Result<Self, RootSystemError> {
        if k == 0 || k > rank {
            return Err(RootSystemError::IndexOutOfRange { index: k, rank });
        }
        Ok(SubsetSpec { rank, excluded: k })
    }

    /// The included indices (1-based), ascending.
    pub fn included(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank).filter(move |&i| i != self.excluded)
    }
}

/// Positive integer weights m_i for i in I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<(usize, i64)>,
}

impl WeightVector {
    pub fn new(spec: &SubsetSpec, values: &[i64]) -> Result<Self, RootSystemError> {
        let idx: Vec<usize> = spec.included().collect();
        if values.len() != idx.len() || values.iter().any(|&m| m < 1) {
            return Err(RootSystemError::BadWeightVector);
        }
        Ok(WeightVector {
            entries: idx.into_iter().zip(values.iter().copied()).collect(),
        })
    }

    pub fn get(&self, i: usize) -> Option<i64> {
        self.entries
            .iter()
            .find(|(j, _)| *j == i)
            .map(|&(_, m)| m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn values(&self) -> Vec<i64> {
        self.entries.iter().map(|&(_, m)| m).collect()
    }
}

/// b_l = <beta_vee, lambda_l> for a root of the reduced set Delta*.
pub fn beta_weights(
    rs: &RootSystem,
    spec: &SubsetSpec,
    beta: usize,
) -> Result<Vec<i64>, RootSystemError> {
    let form = &rs.positive[beta].form;
    if form[spec.excluded - 1] == 0 {
        return Err(RootSystemError::NotInDeltaStar {
            root: beta,
            k: spec.excluded,
        });
    }
    Ok(form.clone())
}

/// <p*(gamma_vee), lambda> where p* projects along beta_vee:
/// p*(gamma_vee) = gamma_vee - (<gamma_vee, lambda_k>/b_k) beta_vee.
///
/// The image need not lie in any coroot set; the pairing is computed
/// directly from the weight pairings, exactly.
pub fn pstar_pairing(
    rs: &RootSystem,
    spec: &SubsetSpec,
    beta: usize,
    gamma: usize,
    lam: &WeightVector,
) -> Result<Rational, RootSystemError> {
    let b = beta_weights(rs, spec, beta)?;
    let g = beta_weights(rs, spec, gamma)?;
    let k = spec.excluded - 1;
    let c = Rational::from((g[k], b[k]));
    let mut acc = Rational::new();
    for (i, m) in lam.iter() {
        let mut coeff = Rational::from(g[i - 1]);
        coeff -= c.clone() * rat(b[i - 1]);
        acc += coeff * rat(m);
    }
    Ok(acc)
}

/// The roots of Delta* = Delta_+ \ Delta_{I+} (those whose k-th weight is
/// nonzero), in the order used for t-variables and k-multi-indices.
///
/// For the cases with printed generating functions the order matches the
/// printed tuples (B: t_1, t_-2..t_-r, t_+2..t_+r; D: t_-2..t_-r,
/// t_+2..t_+r; A_3 with I = {1,3}: t_13, t_23, t_24, t_14); anything else
/// falls back to the canonical root order.
pub fn delta_star_indices(rs: &RootSystem, spec: &SubsetSpec) -> Vec<usize> {
    let k = spec.excluded - 1;
    let canonical: Vec<usize> = (0..rs.num_positive())
        .filter(|&i| rs.positive[i].form[k] != 0)
        .collect();
    let find = |target: &dyn Fn(&PositiveRoot) -> bool| -> Option<usize> {
        canonical.iter().copied().find(|&i| target(&rs.positive[i]))
    };
    let coroot_is = |root: &PositiveRoot, idx: &[(usize, i64)]| -> bool {
        root.coroot.iter().enumerate().all(|(j, x)| {
            let want = idx
                .iter()
                .find(|&&(jj, _)| jj == j)
                .map(|&(_, v)| v)
                .unwrap_or(0);
            *x == rat(want)
        })
    };
    match (rs.kind, spec.excluded) {
        (Kind::B, 1) => {
            let mut order = Vec::new();
            if let Some(i) = find(&|r| coroot_is(r, &[(0, 2)])) {
                order.push(i);
            }
            for j in 1..rs.rank {
                if let Some(i) = find(&|r| coroot_is(r, &[(0, 1), (j, -1)])) {
                    order.push(i);
                }
            }
            for j in 1..rs.rank {
                if let Some(i) = find(&|r| coroot_is(r, &[(0, 1), (j, 1)])) {
                    order.push(i);
                }
            }
            debug_assert_eq!(order.len(), canonical.len());
            order
        }
        (Kind::D, 1) => {
            let mut order = Vec::new();
            for j in 1..rs.rank {
                if let Some(i) = find(&|r| coroot_is(r, &[(0, 1), (j, -1)])) {
                    order.push(i);
                }
            }
            for j in 1..rs.rank {
                if let Some(i) = find(&|r| coroot_is(r, &[(0, 1), (j, 1)])) {
                    order.push(i);
                }
            }
            debug_assert_eq!(order.len(), canonical.len());
            order
        }
        (Kind::A, 2) if rs.rank == 3 => {
            // t_13, t_23, t_24, t_14 where t_ij belongs to e_i - e_j
            let mut order = Vec::new();
            for (i, j) in [(0usize, 2usize), (1, 2), (1, 3), (0, 3)] {
                if let Some(idx) = find(&|r| coroot_is(r, &[(i, 1), (j, -1)])) {
                    order.push(idx);
                }
            }
            debug_assert_eq!(order.len(), canonical.len());
            order
        }
        _ => canonical,
    }
}

/// The roots of Delta_{I+} (forms not involving m_k), canonical order.
pub fn delta_i_plus_indices(rs: &RootSystem, spec: &SubsetSpec) -> Vec<usize> {
    let k = spec.excluded - 1;
    (0..rs.num_positive())
        .filter(|&i| rs.positive[i].form[k] == 0)
        .collect()
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}{} ({} positive roots)", self.kind.letter(), self.rank, self.num_positive())?;
        for i in 0..self.num_positive() {
            writeln!(f, "  #{:<2} {}", i + 1, self.form_name(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms(kind: Kind, rank: usize) -> Vec<Vec<i64>> {
        build_root_system(kind, rank).unwrap().linear_forms()
    }

    #[test]
    fn counts_match_the_classical_families() {
        for r in 1..=6 {
            assert_eq!(forms(Kind::A, r).len(), r * (r + 1) / 2);
        }
        for r in 2..=6 {
            assert_eq!(forms(Kind::B, r).len(), r * r);
            assert_eq!(forms(Kind::C, r).len(), r * r);
        }
        for r in 3..=6 {
            assert_eq!(forms(Kind::D, r).len(), r * (r - 1));
        }
    }

    #[test]
    fn c2_canonical_order() {
        assert_eq!(
            forms(Kind::C, 2),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn a1_single_form() {
        assert_eq!(forms(Kind::A, 1), vec![vec![1]]);
    }

    #[test]
    fn b3_canonical_order() {
        assert_eq!(
            forms(Kind::B, 3),
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![0, 1, 1],
                vec![0, 2, 1],
                vec![1, 1, 1],
                vec![1, 2, 1],
                vec![2, 2, 1],
            ]
        );
    }

    #[test]
    fn b2_matches_printed_definition() {
        assert_eq!(
            forms(Kind::B, 2),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]
        );
    }

    #[test]
    fn a3_matches_printed_definition() {
        assert_eq!(
            forms(Kind::A, 3),
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![0, 1, 1],
                vec![1, 1, 1],
            ]
        );
    }

    #[test]
    fn d3_is_a3_up_to_swapping_m1_m2() {
        let d3: std::collections::BTreeSet<Vec<i64>> = forms(Kind::D, 3)
            .into_iter()
            .map(|f| vec![f[1], f[0], f[2]])
            .collect();
        let a3: std::collections::BTreeSet<Vec<i64>> = forms(Kind::A, 3).into_iter().collect();
        assert_eq!(d3, a3);
    }

    #[test]
    fn pairing_with_simple_coroots_is_identity() {
        for (kind, max) in [(Kind::A, 6), (Kind::B, 6), (Kind::C, 6), (Kind::D, 6)] {
            for rank in kind.min_rank()..=max {
                let rs = build_root_system(kind, rank).unwrap();
                for (l, &si) in rs.simple.iter().enumerate() {
                    for (j, lam) in rs.fundamental_weights.iter().enumerate() {
                        let p = dot(&rs.positive[si].coroot, lam);
                        assert_eq!(p, rat((l == j) as i64), "{kind:?}{rank} alpha_{l} lambda_{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn forms_are_nonzero_nonnegative_integers() {
        for (kind, max) in [(Kind::A, 6), (Kind::B, 6), (Kind::C, 6), (Kind::D, 6)] {
            for rank in kind.min_rank()..=max {
                let rs = build_root_system(kind, rank).unwrap();
                for root in &rs.positive {
                    assert!(root.form.iter().any(|&c| c != 0));
                    assert!(root.form.iter().all(|&c| c >= 0));
                }
            }
        }
    }

    #[test]
    fn rank_below_minimum_is_rejected() {
        assert!(build_root_system(Kind::B, 1).is_err());
        assert!(build_root_system(Kind::C, 1).is_err());
        assert!(build_root_system(Kind::D, 2).is_err());
        assert!(build_root_system(Kind::A, 0).is_err());
    }

    fn root_index(rs: &RootSystem, entries: &[(usize, i64)]) -> usize {
        (0..rs.num_positive())
            .find(|&i| {
                rs.positive[i].coroot.iter().enumerate().all(|(j, x)| {
                    let want = entries
                        .iter()
                        .find(|&&(jj, _)| jj == j)
                        .map(|&(_, v)| v)
                        .unwrap_or(0);
                    *x == rat(want)
                })
            })
            .expect("root present")
    }

    #[test]
    fn b_r_beta_weights_match_the_case_tables() {
        let rs = build_root_system(Kind::B, 4).unwrap();
        let spec = SubsetSpec::excluding(4, 1).unwrap();
        // beta = e1 - e3: b_l = 1 for l < 3, 0 after
        let b = beta_weights(&rs, &spec, root_index(&rs, &[(0, 1), (2, -1)])).unwrap();
        assert_eq!(b, vec![1, 1, 0, 0]);
        // beta = 2 e1: b_l = 2 for l < r, 1 at l = r
        let b = beta_weights(&rs, &spec, root_index(&rs, &[(0, 2)])).unwrap();
        assert_eq!(b, vec![2, 2, 2, 1]);
        // roots not meeting m_1 are rejected
        let a2 = root_index(&rs, &[(1, 1), (2, -1)]);
        assert!(beta_weights(&rs, &spec, a2).is_err());
    }

    #[test]
    fn a3_beta_weights_all_one_on_the_long_root() {
        let rs = build_root_system(Kind::A, 3).unwrap();
        let spec = SubsetSpec::excluding(3, 2).unwrap();
        let theta = root_index(&rs, &[(0, 1), (3, -1)]);
        assert_eq!(beta_weights(&rs, &spec, theta).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn b_r_pstar_pairings_match_the_case_tables() {
        // B_4, I = {2,3,4}, lambda = (m2,m3,m4)
        let rs = build_root_system(Kind::B, 4).unwrap();
        let spec = SubsetSpec::excluding(4, 1).unwrap();
        let lam = WeightVector::new(&spec, &[2, 3, 5]).unwrap();
        let (m2, m3, m4) = (2i64, 3, 5);
        let e1mej = |j: usize| root_index(&rs, &[(0, 1), (j - 1, -1)]);
        let e1pej = |j: usize| root_index(&rs, &[(0, 1), (j - 1, 1)]);
        let twoe1 = root_index(&rs, &[(0, 2)]);
        // beta = e1 - e3 (j = 3)
        let beta = e1mej(3);
        // gamma = e1 - e2 (i = 2 < j): -m_{i,j-1} = -m2
        assert_eq!(
            pstar_pairing(&rs, &spec, beta, e1mej(2), &lam).unwrap(),
            Rational::from(-m2)
        );
        // gamma = e1 - e4 (i = 4 > j): m_{j,i-1} = m3
        assert_eq!(
            pstar_pairing(&rs, &spec, beta, e1mej(4), &lam).unwrap(),
            Rational::from(m3)
        );
        // gamma = e1 + e2 (i = 2 <= j): m_{i,j-1} + 2 m_{j,r-1} + m_r
        assert_eq!(
            pstar_pairing(&rs, &spec, beta, e1pej(2), &lam).unwrap(),
            Rational::from(m2 + 2 * m3 + m4)
        );
        // gamma = 2 e1: 2 m_{j,r-1} + m_r
        assert_eq!(
            pstar_pairing(&rs, &spec, beta, twoe1, &lam).unwrap(),
            Rational::from(2 * m3 + m4)
        );
        // beta = 2 e1, gamma = e1 +- e_i: +-(m_{i,r-1} + m_r/2)
        let mir = |i: i64| match i {
            2 => m2 + m3,
            3 => m3,
            _ => 0,
        };
        for i in [2usize, 3] {
            let want = Rational::from(2 * mir(i as i64) + m4) / Rational::from(2);
            assert_eq!(
                pstar_pairing(&rs, &spec, twoe1, e1pej(i), &lam).unwrap(),
                want.clone()
            );
            assert_eq!(
                pstar_pairing(&rs, &spec, twoe1, e1mej(i), &lam).unwrap(),
                -want
            );
        }
    }

    #[test]
    fn a3_pstar_is_gamma_minus_beta() {
        let rs = build_root_system(Kind::A, 3).unwrap();
        let spec = SubsetSpec::excluding(3, 2).unwrap();
        let lam = WeightVector::new(&spec, &[4, 7]).unwrap();
        let ds = delta_star_indices(&rs, &spec);
        for &beta in &ds {
            for &gamma in &ds {
                if beta == gamma {
                    continue;
                }
                let want: i64 = [(0usize, 4i64), (2, 7)]
                    .iter()
                    .map(|&(l, m)| {
                        (rs.positive[gamma].form[l] - rs.positive[beta].form[l]) * m
                    })
                    .sum();
                assert_eq!(
                    pstar_pairing(&rs, &spec, beta, gamma, &lam).unwrap(),
                    Rational::from(want)
                );
            }
        }
    }

    #[test]
    fn pstar_pairing_is_linear_in_lambda() {
        let rs = build_root_system(Kind::B, 3).unwrap();
        let spec = SubsetSpec::excluding(3, 1).unwrap();
        let a = WeightVector::new(&spec, &[1, 4]).unwrap();
        let b = WeightVector::new(&spec, &[3, 2]).unwrap();
        let sum = WeightVector::new(&spec, &[4, 6]).unwrap();
        let ds = delta_star_indices(&rs, &spec);
        for &beta in &ds {
            for &gamma in &ds {
                if beta == gamma {
                    continue;
                }
                let pa = pstar_pairing(&rs, &spec, beta, gamma, &a).unwrap();
                let pb = pstar_pairing(&rs, &spec, beta, gamma, &b).unwrap();
                let ps = pstar_pairing(&rs, &spec, beta, gamma, &sum).unwrap();
                assert_eq!(pa + pb, ps);
            }
        }
    }

    #[test]
    fn delta_star_orders_for_printed_cases() {
        let rs = build_root_system(Kind::B, 3).unwrap();
        let spec = SubsetSpec::excluding(3, 1).unwrap();
        let names: Vec<String> = delta_star_indices(&rs, &spec)
            .into_iter()
            .map(|i| rs.form_name(i))
            .collect();
        // t_1, t_-2, t_-3, t_+2, t_+3
        assert_eq!(
            names,
            vec!["2m1+2m2+m3", "m1", "m1+m2", "m1+2m2+m3", "m1+m2+m3"]
        );

        let rs = build_root_system(Kind::A, 3).unwrap();
        let spec = SubsetSpec::excluding(3, 2).unwrap();
        let names: Vec<String> = delta_star_indices(&rs, &spec)
            .into_iter()
            .map(|i| rs.form_name(i))
            .collect();
        // t_13, t_23, t_24, t_14
        assert_eq!(names, vec!["m1+m2", "m2", "m2+m3", "m1+m2+m3"]);
    }
}
