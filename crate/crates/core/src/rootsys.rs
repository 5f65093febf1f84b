//! Classical root systems in reversed-basis coordinates.
//!
//! `f_1` is the rightmost Dynkin node's side of the numbering: simple roots are
//! `alpha_1 = f_1` (B), `2 f_1` (C), `f_1 + f_2` (D), `f_2 - f_1` (A), and
//! `alpha_j` walks leftward by `f_j - f_{j-1}` (for A by `f_{j+1} - f_j`).
//! Larger systems of the same type extend a smaller one by zero-padding the
//! high coordinates, so restriction to a subsystem is truncation.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};
use serde_json::json;

use crate::coord::CoordVector;
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::ratio::{is_nonneg_integer, rat, rat_str, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassicalType {
    A,
    B,
    C,
    D,
}

impl ClassicalType {
    pub fn letter(self) -> char {
        match self {
            ClassicalType::A => 'A',
            ClassicalType::B => 'B',
            ClassicalType::C => 'C',
            ClassicalType::D => 'D',
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(ClassicalType::A),
            "B" => Ok(ClassicalType::B),
            "C" => Ok(ClassicalType::C),
            "D" => Ok(ClassicalType::D),
            other => Err(Error::BadParams(format!("unknown type `{other}`"))),
        }
    }

    /// Smallest rank admitted by the diagram table; `permissive` drops to the
    /// smallest degenerate-but-well-defined rank for oracle tests.
    pub fn min_rank(self, permissive: bool) -> usize {
        match (self, permissive) {
            (ClassicalType::A, _) => 1,
            (ClassicalType::B, false) => 2,
            (ClassicalType::B, true) => 1,
            (ClassicalType::C, false) => 3,
            (ClassicalType::C, true) => 1,
            (ClassicalType::D, false) => 4,
            (ClassicalType::D, true) => 2,
        }
    }

    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            ClassicalType::A => rank + 1,
            _ => rank,
        }
    }

    pub fn root_count(self, rank: usize) -> usize {
        match self {
            ClassicalType::A => rank * (rank + 1),
            ClassicalType::B | ClassicalType::C => 2 * rank * rank,
            ClassicalType::D => 2 * rank * (rank - 1),
        }
    }
}

impl std::fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystemCtx {
    pub classical_type: ClassicalType,
    pub rank: usize,
    pub ambient_dim: usize,
    pub roots: BTreeSet<CoordVector>,
    pub positive_roots: Vec<CoordVector>,
    /// `alpha_1 .. alpha_rank` in diagram order (`alpha_1` at the right end).
    pub simple_roots: Vec<CoordVector>,
    /// Half the sum of the positive roots.
    pub rho: CoordVector,
    /// Factor `s` with `<x,y>_realization = s * sum x_j y_j` in the trace-form
    /// matrix realization: 1 for type A, 2 for B/C/D.
    pub metric_scale: Rational,
    pub permissive: bool,
}

pub fn build(ty: ClassicalType, rank: usize) -> Result<RootSystemCtx> {
    build_with(ty, rank, false)
}

pub fn build_permissive(ty: ClassicalType, rank: usize) -> Result<RootSystemCtx> {
    build_with(ty, rank, true)
}

pub fn build_with(ty: ClassicalType, rank: usize, permissive: bool) -> Result<RootSystemCtx> {
    if rank < ty.min_rank(permissive) {
        return Err(Error::RankOutOfRange {
            ty: ty.letter(),
            rank,
            min: ty.min_rank(permissive),
        });
    }
    let n = ty.ambient_dim(rank);
    let f = |i: usize| CoordVector::basis(n, i);

    let mut positive: Vec<CoordVector> = Vec::new();
    match ty {
        ClassicalType::A => {
            // f_i - f_j for i > j.
            for i in 0..n {
                for j in 0..i {
                    positive.push(f(i).sub(&f(j)));
                }
            }
        }
        ClassicalType::B => {
            for i in 0..n {
                positive.push(f(i));
                for j in 0..i {
                    positive.push(f(i).sub(&f(j)));
                    positive.push(f(i).add(&f(j)));
                }
            }
        }
        ClassicalType::C => {
            for i in 0..n {
                positive.push(f(i).scale(&rat(2)));
                for j in 0..i {
                    positive.push(f(i).sub(&f(j)));
                    positive.push(f(i).add(&f(j)));
                }
            }
        }
        ClassicalType::D => {
            for i in 0..n {
                for j in 0..i {
                    positive.push(f(i).sub(&f(j)));
                    positive.push(f(i).add(&f(j)));
                }
            }
        }
    }
    positive.sort();

    let mut roots: BTreeSet<CoordVector> = BTreeSet::new();
    for r in &positive {
        roots.insert(r.clone());
        roots.insert(r.neg());
    }

    let simple_roots: Vec<CoordVector> = match ty {
        ClassicalType::A => (0..rank).map(|j| f(j + 1).sub(&f(j))).collect(),
        ClassicalType::B => std::iter::once(f(0))
            .chain((1..rank).map(|j| f(j).sub(&f(j - 1))))
            .collect(),
        ClassicalType::C => std::iter::once(f(0).scale(&rat(2)))
            .chain((1..rank).map(|j| f(j).sub(&f(j - 1))))
            .collect(),
        ClassicalType::D => std::iter::once(f(0).add(&f(1)))
            .chain((1..rank).map(|j| f(j).sub(&f(j - 1))))
            .collect(),
    };

    let mut rho = CoordVector::zero(n);
    for r in &positive {
        rho = rho.add(r);
    }
    rho = rho.scale(&crate::ratio::frac(1, 2));

    let metric_scale = match ty {
        ClassicalType::A => rat(1),
        _ => rat(2),
    };

    let ctx = RootSystemCtx {
        classical_type: ty,
        rank,
        ambient_dim: n,
        roots,
        positive_roots: positive,
        simple_roots,
        rho,
        metric_scale,
        permissive: rank < ty.min_rank(false),
    };
    ctx.validate()?;
    Ok(ctx)
}

impl RootSystemCtx {
    /// Construction-time invariants: count formula, simple roots are roots,
    /// every positive root is a nonnegative integer combination of simples.
    fn validate(&self) -> Result<()> {
        let expect = self.classical_type.root_count(self.rank);
        if self.roots.len() != expect {
            return Err(Error::internal(format!(
                "{}_{}: {} roots, expected {}",
                self.classical_type,
                self.rank,
                self.roots.len(),
                expect
            )));
        }
        for alpha in &self.simple_roots {
            if !self.roots.contains(alpha) {
                return Err(Error::internal("simple root missing from root set"));
            }
        }
        for r in &self.positive_roots {
            let coeffs = self
                .expand_in_simple_roots(r)
                .ok_or_else(|| Error::internal("positive root outside simple-root lattice"))?;
            if !coeffs.iter().all(is_nonneg_integer) {
                return Err(Error::internal(
                    "positive root with mixed-sign simple coefficients",
                ));
            }
        }
        Ok(())
    }

    /// Coefficients of `v` in the simple-root basis, when they exist.
    pub fn expand_in_simple_roots(&self, v: &CoordVector) -> Option<Vec<Rational>> {
        let rows = self.ambient_dim;
        let cols = self.rank;
        let a: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| self.simple_roots[j].0[i].clone())
                    .collect()
            })
            .collect();
        crate::linalg::solve(&a, &v.0).ok()
    }

    pub fn is_root(&self, v: &CoordVector) -> bool {
        self.roots.contains(v)
    }

    /// Unique positive root of maximal height (undefined for the reducible
    /// permissive case D_2).
    pub fn highest_root(&self) -> Result<CoordVector> {
        let mut best: Option<(Rational, CoordVector)> = None;
        let mut tie = false;
        for r in &self.positive_roots {
            let coeffs = self
                .expand_in_simple_roots(r)
                .ok_or_else(|| Error::internal("root outside simple lattice"))?;
            let height = coeffs.into_iter().fold(Rational::zero(), |a, c| a + c);
            match &best {
                None => best = Some((height, r.clone())),
                Some((h, _)) => {
                    if height > *h {
                        best = Some((height, r.clone()));
                        tie = false;
                    } else if height == *h {
                        tie = true;
                    }
                }
            }
        }
        let (_, root) = best.ok_or_else(|| Error::internal("empty root system"))?;
        if tie {
            return Err(Error::BadParams(
                "no unique highest root (reducible system)".into(),
            ));
        }
        Ok(root)
    }

    /// Geometric squared length of `v` under the trace-form realization metric.
    pub fn realization_norm_sq(&self, v: &CoordVector) -> Rational {
        v.norm_sq() * self.metric_scale.clone()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": self.classical_type.letter().to_string(),
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "metric_scale": rat_str(&self.metric_scale),
            "permissive": self.permissive,
            "roots": self.roots.iter().map(CoordVector::to_json).collect::<Vec<_>>(),
            "simple_roots": self.simple_roots.iter().map(CoordVector::to_json).collect::<Vec<_>>(),
            "rho": self.rho.to_json(),
            "highest_root_marks": highest_root_marks(self).ok().map(|m| m.to_vec()),
        })
    }
}

/// The polynomial `prod_{alpha > 0} <lambda, alpha>` in the ambient lambda
/// coordinates: homogeneous of degree `|positive roots|`, alternating under
/// the Weyl group.
pub fn varpi(ctx: &RootSystemCtx) -> SparsePoly {
    let n = ctx.ambient_dim;
    let mut acc = SparsePoly::one(n);
    for alpha in &ctx.positive_roots {
        let lin = SparsePoly::from_terms(
            n,
            false,
            alpha
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let mut e = vec![0i64; n];
                    e[i] = 1;
                    (e, c.clone())
                }),
        )
        .expect("linear form");
        acc = acc.mul(&lin).expect("varpi product");
    }
    acc
}

/// `varpi` evaluated at a point.
pub fn varpi_at(ctx: &RootSystemCtx, lambda: &CoordVector) -> Rational {
    let mut acc = Rational::one();
    for alpha in &ctx.positive_roots {
        acc *= alpha.dot(lambda);
    }
    acc
}

#[derive(Debug, Clone)]
pub struct CorootLength {
    /// 1-based simple-root index.
    pub index: usize,
    pub coroot: CoordVector,
    /// Squared length under the realization metric.
    pub squared_length: Rational,
}

/// The vectors `t_j = 2 alpha_j / <alpha_j, alpha_j>` for the simple roots,
/// with squared lengths in the trace-form metric.
pub fn coroot_lengths(ctx: &RootSystemCtx) -> Vec<CorootLength> {
    ctx.simple_roots
        .iter()
        .enumerate()
        .map(|(j, alpha)| {
            let coroot = alpha.scale(&(rat(2) / alpha.norm_sq()));
            let squared_length = ctx.realization_norm_sq(&coroot);
            CorootLength {
                index: j + 1,
                coroot,
                squared_length,
            }
        })
        .collect()
}

/// Coefficients of the simple roots in the highest root, as nonnegative
/// integers in diagram order `alpha_1 .. alpha_rank`.
pub fn highest_root_marks(ctx: &RootSystemCtx) -> Result<Vec<u64>> {
    let theta = ctx.highest_root()?;
    let coeffs = ctx
        .expand_in_simple_roots(&theta)
        .ok_or_else(|| Error::internal("highest root outside simple lattice"))?;
    coeffs
        .iter()
        .map(|c| {
            crate::ratio::as_integer(c)
                .filter(|b| !b.is_negative())
                .and_then(|b| u64::try_from(b).ok())
                .ok_or_else(|| Error::internal("non-integer highest-root mark"))
        })
        .collect()
}

/// The hard-coded diagram-label table for the highest-root marks, in diagram
/// order `alpha_1 .. alpha_rank`. Serves as the acceptance reference against
/// the recomputed marks.
pub fn expected_marks_table(ty: ClassicalType, rank: usize) -> Vec<u64> {
    match ty {
        ClassicalType::A => vec![1; rank],
        ClassicalType::B => {
            // right end (alpha_1) through interior 2, left end 1
            let mut m = vec![2; rank];
            m[rank - 1] = 1;
            m
        }
        ClassicalType::C => {
            let mut m = vec![2; rank];
            m[0] = 1;
            m
        }
        ClassicalType::D => {
            let mut m = vec![2; rank];
            m[0] = 1;
            m[1] = 1;
            m[rank - 1] = 1;
            m
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::frac;

    #[test]
    fn b2_roots_explicit() {
        let ctx = build(ClassicalType::B, 2).unwrap();
        assert_eq!(ctx.roots.len(), 8);
        let f1 = CoordVector::basis(2, 0);
        let f2 = CoordVector::basis(2, 1);
        for v in [f1.clone(), f2.clone(), f2.sub(&f1), f2.add(&f1)] {
            assert!(ctx.roots.contains(&v));
            assert!(ctx.roots.contains(&v.neg()));
        }
    }

    #[test]
    fn a1_rho() {
        let ctx = build(ClassicalType::A, 1).unwrap();
        assert_eq!(ctx.roots.len(), 2);
        assert_eq!(ctx.rho, CoordVector(vec![frac(-1, 2), frac(1, 2)]));
    }

    #[test]
    fn d4_rho_and_count() {
        let ctx = build(ClassicalType::D, 4).unwrap();
        assert_eq!(ctx.roots.len(), 24);
        assert_eq!(ctx.rho, CoordVector::from_i64(&[0, 1, 2, 3]));
    }

    #[test]
    fn root_counts_up_to_rank_8() {
        for rank in 1..=8usize {
            for ty in [
                ClassicalType::A,
                ClassicalType::B,
                ClassicalType::C,
                ClassicalType::D,
            ] {
                if rank < ty.min_rank(true) {
                    continue;
                }
                let ctx = build_permissive(ty, rank).unwrap();
                assert_eq!(ctx.roots.len(), ty.root_count(rank));
            }
        }
    }

    #[test]
    fn rank_range_enforced() {
        assert!(build(ClassicalType::D, 3).is_err());
        assert!(build_permissive(ClassicalType::D, 3).is_ok());
        assert!(build_permissive(ClassicalType::D, 1).is_err());
        assert!(build(ClassicalType::C, 2).is_err());
        assert!(build_permissive(ClassicalType::C, 1).is_ok());
    }

    #[test]
    fn varpi_values() {
        // A_1: the single positive root f_2 - f_1 pairs to lambda_2 - lambda_1.
        let ctx = build(ClassicalType::A, 1).unwrap();
        let p = varpi(&ctx);
        let expect =
            SparsePoly::from_terms(2, false, vec![(vec![0, 1], rat(1)), (vec![1, 0], rat(-1))])
                .unwrap();
        assert_eq!(p, expect);

        // B_2: lambda_1 lambda_2 (lambda_2 - lambda_1)(lambda_2 + lambda_1), degree 4.
        let ctx = build(ClassicalType::B, 2).unwrap();
        let p = varpi(&ctx);
        assert_eq!(p.total_degree(), Some(4));
        let l1 = SparsePoly::var(2, 0);
        let l2 = SparsePoly::var(2, 1);
        let expect = l1
            .mul(&l2)
            .unwrap()
            .mul(&l2.sub(&l1).unwrap())
            .unwrap()
            .mul(&l2.add(&l1).unwrap())
            .unwrap();
        assert_eq!(p, expect);

        // D_4 regression pin: varpi(rho) = 4320.
        let ctx = build(ClassicalType::D, 4).unwrap();
        assert_eq!(varpi_at(&ctx, &ctx.rho), rat(4320));
        assert_eq!(varpi(&ctx).eval(&ctx.rho.0).unwrap(), rat(4320));
    }

    #[test]
    fn coroot_lengths_per_type() {
        // B_n: |t_1|^2 = 8, |t_j|^2 = 4.
        let b = coroot_lengths(&build(ClassicalType::B, 3).unwrap());
        assert_eq!(b[0].squared_length, rat(8));
        assert!(b[1..].iter().all(|c| c.squared_length == rat(4)));
        // C_n: |t_1|^2 = 2 (t_1 = f_1), |t_j|^2 = 4.
        let c = coroot_lengths(&build(ClassicalType::C, 3).unwrap());
        assert_eq!(c[0].coroot, CoordVector::basis(3, 0));
        assert_eq!(c[0].squared_length, rat(2));
        assert!(c[1..].iter().all(|x| x.squared_length == rat(4)));
        // A_n: all squared lengths 2.
        let a = coroot_lengths(&build(ClassicalType::A, 4).unwrap());
        assert!(a.iter().all(|x| x.squared_length == rat(2)));
        // D_n: all squared lengths 4.
        let d = coroot_lengths(&build(ClassicalType::D, 4).unwrap());
        assert!(d.iter().all(|x| x.squared_length == rat(4)));
    }

    #[test]
    fn highest_root_marks_match_table() {
        for (ty, ranks) in [
            (ClassicalType::A, 1..=6usize),
            (ClassicalType::B, 2..=6),
            (ClassicalType::C, 2..=6),
            (ClassicalType::D, 3..=6),
        ] {
            for rank in ranks {
                let ctx = build_permissive(ty, rank).unwrap();
                let marks = highest_root_marks(&ctx).unwrap();
                assert_eq!(marks, expected_marks_table(ty, rank), "{ty:?}_{rank}");
            }
        }
        // Spot values from the diagram labels.
        let a3 = highest_root_marks(&build(ClassicalType::A, 3).unwrap()).unwrap();
        assert_eq!(a3, vec![1, 1, 1]);
        let b4 = highest_root_marks(&build(ClassicalType::B, 4).unwrap()).unwrap();
        assert_eq!(b4, vec![2, 2, 2, 1]);
        let d4 = highest_root_marks(&build(ClassicalType::D, 4).unwrap()).unwrap();
        assert_eq!(d4, vec![1, 1, 2, 1]);
    }
}
