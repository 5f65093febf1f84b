//! Propagation of root systems and symmetric spaces: left-padding embeddings,
//! validated propagation pairs, the catalog of irreducible Riemannian
//! symmetric spaces, the reduced system Sigma_2, and class-one fundamental
//! weights.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};
use serde_json::json;

use crate::coord::CoordVector;
use crate::error::{Error, Result};
use crate::ratio::{rat, Rational};
use crate::rootsys::{build_permissive, build_with, ClassicalType, RootSystemCtx};

/// Coordinate injection placing the small coordinates at `f_1..f_small` and
/// zeros above (left padding in the display order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub small_dim: usize,
    pub large_dim: usize,
}

impl Embedding {
    pub fn new(small_dim: usize, large_dim: usize) -> Result<Self> {
        if small_dim > large_dim {
            return Err(Error::DimensionMismatch(small_dim, large_dim));
        }
        Ok(Embedding {
            small_dim,
            large_dim,
        })
    }

    pub fn pad(&self, x: &CoordVector) -> Result<CoordVector> {
        if x.dim() != self.small_dim {
            return Err(Error::DimensionMismatch(x.dim(), self.small_dim));
        }
        x.pad(self.large_dim)
    }

    /// Restriction of a functional: keep the small coordinates.
    pub fn project(&self, x: &CoordVector) -> Result<CoordVector> {
        if x.dim() != self.large_dim {
            return Err(Error::DimensionMismatch(x.dim(), self.large_dim));
        }
        x.truncate(self.small_dim)
    }

    /// The injection preserves the abstract pairing.
    pub fn is_isometric_on_basis(&self) -> bool {
        // Zero padding trivially preserves the dot product; checked on basis pairs.
        (0..self.small_dim).all(|i| {
            (0..self.small_dim).all(|j| {
                let a = CoordVector::basis(self.small_dim, i);
                let b = CoordVector::basis(self.small_dim, j);
                let pa = a.pad(self.large_dim).unwrap();
                let pb = b.pad(self.large_dim).unwrap();
                a.dot(&b) == pa.dot(&pb)
            })
        })
    }
}

/// A validated pair (smaller system, larger system, left-padding embedding)
/// of the same classical type.
#[derive(Debug, Clone)]
pub struct PropagationPair {
    pub ty: ClassicalType,
    pub small: RootSystemCtx,
    pub large: RootSystemCtx,
    pub embedding: Embedding,
}

/// Build and validate a propagation pair: same type, `n <= k`, and the
/// simple-root restriction identity `alpha_{n,j} = alpha_{k,j}|` for `j <= n`.
pub fn make_pair(ty: ClassicalType, n: usize, k: usize) -> Result<PropagationPair> {
    if n > k {
        return Err(Error::BadParams(format!("need n <= k, got {n} > {k}")));
    }
    let small = build_permissive(ty, n)?;
    let large = build_permissive(ty, k)?;
    let embedding = Embedding::new(small.ambient_dim, large.ambient_dim)?;
    for j in 0..small.rank {
        let restricted = embedding.project(&large.simple_roots[j])?;
        if restricted != small.simple_roots[j] {
            return Err(Error::internal(format!(
                "simple-root restriction identity fails at j = {}",
                j + 1
            )));
        }
    }
    if !embedding.is_isometric_on_basis() {
        return Err(Error::internal("embedding is not isometric"));
    }
    Ok(PropagationPair {
        ty,
        small,
        large,
        embedding,
    })
}

/// Propagation of a reducible space is factor-wise: one validated pair per
/// irreducible factor (the smaller product may have fewer factors; the extra
/// large factors do not constrain anything here).
pub fn make_product_pairs(
    factors: &[(ClassicalType, usize, usize)],
) -> Result<Vec<PropagationPair>> {
    factors
        .iter()
        .map(|&(ty, n, k)| make_pair(ty, n, k))
        .collect()
}

/// Symmetric-space families of the classification table, by row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    AComplex,
    BComplex,
    DComplex,
    CComplex,
    AIII,
    AI,
    AII,
    BDI,
    DIII,
    CII,
    CI,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" | "ACOMPLEX" => Ok(Family::AComplex),
            "B" | "BCOMPLEX" => Ok(Family::BComplex),
            "D" | "DCOMPLEX" => Ok(Family::DComplex),
            "C" | "CCOMPLEX" => Ok(Family::CComplex),
            "AIII" => Ok(Family::AIII),
            "AI" => Ok(Family::AI),
            "AII" => Ok(Family::AII),
            "BDI" => Ok(Family::BDI),
            "DIII" => Ok(Family::DIII),
            "CII" => Ok(Family::CII),
            "CI" => Ok(Family::CI),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn row(self) -> u8 {
        match self {
            Family::AComplex => 1,
            Family::BComplex => 2,
            Family::DComplex => 3,
            Family::CComplex => 4,
            Family::AIII => 5,
            Family::AI => 6,
            Family::AII => 7,
            Family::BDI => 8,
            Family::DIII => 9,
            Family::CII => 10,
            Family::CI => 11,
        }
    }

    /// Whether the family takes one parameter `j` or two `(p, q)`.
    pub fn takes_pq(self) -> bool {
        matches!(self, Family::AIII | Family::BDI | Family::CII)
    }
}

/// Parameters for a catalog row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    J(usize),
    PQ { p: usize, q: usize },
}

/// One evaluated row of the classification table.
#[derive(Debug, Clone)]
pub struct SymSpaceEntry {
    pub family: Family,
    pub label: String,
    pub g_noncompact: String,
    pub g_compact: String,
    pub k_subgroup: String,
    pub rank: usize,
    pub dim: usize,
    pub sigma_half_type: ClassicalType,
    pub sigma_half_rank: usize,
    /// True exactly when Sigma_{1/2} differs from Sigma.
    pub nonreduced: bool,
}

impl SymSpaceEntry {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "row": self.family.row(),
            "label": self.label,
            "g_noncompact": self.g_noncompact,
            "g_compact": self.g_compact,
            "k": self.k_subgroup,
            "rank": self.rank,
            "dim": self.dim,
            "sigma_half_type": self.sigma_half_type.letter().to_string(),
            "sigma_half_rank": self.sigma_half_rank,
            "nonreduced": self.nonreduced,
        })
    }
}

/// Evaluate a catalog row at the given parameters.
pub fn catalog_lookup(family: Family, params: FamilyParams) -> Result<SymSpaceEntry> {
    let err = |msg: &str| Err(Error::BadParams(msg.into()));
    match (family, params) {
        (Family::AComplex, FamilyParams::J(j)) => {
            if j < 2 {
                return err("A_j needs j >= 2");
            }
            Ok(SymSpaceEntry {
                family,
                label: format!("A_{j}"),
                g_noncompact: format!("SL({j},C)"),
                g_compact: format!("SU({j})xSU({j})"),
                k_subgroup: format!("diag SU({j})"),
                rank: j - 1,
                dim: j * j - 1,
                sigma_half_type: ClassicalType::A,
                sigma_half_rank: j - 1,
                nonreduced: false,
            })
        }
        (Family::BComplex, FamilyParams::J(j)) => {
            if j < 1 {
                return err("B_j needs j >= 1");
            }
            let k = 2 * j + 1;
            Ok(SymSpaceEntry {
                family,
                label: format!("B_{j}"),
                g_noncompact: format!("SO({k},C)"),
                g_compact: format!("SO({k})xSO({k})"),
                k_subgroup: format!("diag SO({k})"),
                rank: j,
                dim: 2 * j * j + j,
                sigma_half_type: ClassicalType::B,
                sigma_half_rank: j,
                nonreduced: false,
            })
        }
        (Family::DComplex, FamilyParams::J(j)) => {
            if j < 2 {
                return err("D_j needs j >= 2");
            }
            Ok(SymSpaceEntry {
                family,
                label: format!("D_{j}"),
                g_noncompact: format!("SO({},C)", 2 * j),
                g_compact: format!("SO({0})xSO({0})", 2 * j),
                k_subgroup: format!("diag SO({})", 2 * j),
                rank: j,
                dim: 2 * j * j - j,
                sigma_half_type: ClassicalType::D,
                sigma_half_rank: j,
                nonreduced: false,
            })
        }
        (Family::CComplex, FamilyParams::J(j)) => {
            if j < 1 {
                return err("C_j needs j >= 1");
            }
            Ok(SymSpaceEntry {
                family,
                label: format!("C_{j}"),
                g_noncompact: format!("Sp({j},C)"),
                g_compact: format!("Sp({j})xSp({j})"),
                k_subgroup: format!("diag Sp({j})"),
                rank: j,
                dim: 2 * j * j + j,
                sigma_half_type: ClassicalType::C,
                sigma_half_rank: j,
                nonreduced: false,
            })
        }
        (Family::AIII, FamilyParams::PQ { p, q }) => {
            if p < 1 || q < 1 {
                return err("AIII needs p, q >= 1");
            }
            let (lo, hi) = (p.min(q), p.max(q));
            let nonreduced = lo < hi;
            Ok(SymSpaceEntry {
                family,
                label: format!("AIII(p={p},q={q})"),
                g_noncompact: format!("SU({p},{q})"),
                g_compact: format!("SU({})", p + q),
                k_subgroup: format!("S(U({p})xU({q}))"),
                rank: lo,
                dim: 2 * p * q,
                sigma_half_type: if nonreduced {
                    ClassicalType::B
                } else {
                    ClassicalType::C
                },
                sigma_half_rank: lo,
                nonreduced,
            })
        }
        (Family::AI, FamilyParams::J(j)) => {
            if j < 2 {
                return err("AI needs j >= 2");
            }
            Ok(SymSpaceEntry {
                family,
                label: format!("AI(j={j})"),
                g_noncompact: format!("SL({j},R)"),
                g_compact: format!("SU({j})"),
                k_subgroup: format!("SO({j})"),
                rank: j - 1,
                dim: (j - 1) * (j + 2) / 2,
                sigma_half_type: ClassicalType::A,
                sigma_half_rank: j - 1,
                nonreduced: false,
            })
        }
        (Family::AII, FamilyParams::J(j)) => {
            if j < 2 {
                return err("AII needs j >= 2");
            }
            Ok(SymSpaceEntry {
                family,
                label: format!("AII(j={j})"),
                g_noncompact: format!("SU*({})", 2 * j),
                g_compact: format!("SU({})", 2 * j),
                k_subgroup: format!("Sp({j})"),
                rank: j - 1,
                dim: 2 * j * j - j - 1,
                sigma_half_type: ClassicalType::A,
                sigma_half_rank: j - 1,
                nonreduced: false,
            })
        }
        (Family::BDI, FamilyParams::PQ { p, q }) => {
            if p < 1 || q < 1 || p + q < 3 {
                return err("BDI needs p, q >= 1, p + q >= 3");
            }
            let (lo, hi) = (p.min(q), p.max(q));
            let ty = if lo == hi {
                ClassicalType::D
            } else {
                ClassicalType::B
            };
            Ok(SymSpaceEntry {
                family,
                label: format!("BDI(p={p},q={q})"),
                g_noncompact: format!("SO_o({p},{q})"),
                g_compact: format!("SO({})", p + q),
                k_subgroup: format!("SO({p})xSO({q})"),
                rank: lo,
                dim: p * q,
                sigma_half_type: ty,
                sigma_half_rank: lo,
                nonreduced: false,
            })
        }
        (Family::DIII, FamilyParams::J(j)) => {
            if j < 2 {
                return err("DIII needs j >= 2");
            }
            let r = j / 2;
            let nonreduced = j % 2 == 1;
            Ok(SymSpaceEntry {
                family,
                label: format!("DIII(j={j})"),
                g_noncompact: format!("SO*({})", 2 * j),
                g_compact: format!("SO({})", 2 * j),
                k_subgroup: format!("U({j})"),
                rank: r,
                dim: j * (j - 1),
                sigma_half_type: if nonreduced {
                    ClassicalType::B
                } else {
                    ClassicalType::C
                },
                sigma_half_rank: r,
                nonreduced,
            })
        }
        (Family::CII, FamilyParams::PQ { p, q }) => {
            if p < 1 || q < 1 {
                return err("CII needs p, q >= 1");
            }
            let (lo, hi) = (p.min(q), p.max(q));
            let nonreduced = lo < hi;
            Ok(SymSpaceEntry {
                family,
                label: format!("CII(p={p},q={q})"),
                g_noncompact: format!("Sp({p},{q})"),
                g_compact: format!("Sp({})", p + q),
                k_subgroup: format!("Sp({p})xSp({q})"),
                rank: lo,
                dim: 4 * p * q,
                sigma_half_type: if nonreduced {
                    ClassicalType::B
                } else {
                    ClassicalType::C
                },
                sigma_half_rank: lo,
                nonreduced,
            })
        }
        (Family::CI, FamilyParams::J(j)) => {
            if j < 1 {
                return err("CI needs j >= 1");
            }
            Ok(SymSpaceEntry {
                family,
                label: format!("CI(j={j})"),
                g_noncompact: format!("Sp({j},R)"),
                g_compact: format!("Sp({j})"),
                k_subgroup: format!("U({j})"),
                rank: j,
                dim: j * (j + 1),
                sigma_half_type: ClassicalType::C,
                sigma_half_rank: j,
                nonreduced: false,
            })
        }
        _ => err("family/parameter shape mismatch (use --j or --p/--q as the row requires)"),
    }
}

/// Static 11-row family metadata (formulas as display strings), for the
/// versioned catalog dump.
pub fn catalog_families() -> Vec<serde_json::Value> {
    let rows = [
        (
            1,
            "A_j",
            "SL(j,C)",
            "SU(j)xSU(j)",
            "diag SU(j)",
            "j-1",
            "j^2-1",
            "A",
            "never",
        ),
        (
            2,
            "B_j",
            "SO(2j+1,C)",
            "SO(2j+1)xSO(2j+1)",
            "diag SO(2j+1)",
            "j",
            "2j^2+j",
            "B",
            "never",
        ),
        (
            3,
            "D_j",
            "SO(2j,C)",
            "SO(2j)xSO(2j)",
            "diag SO(2j)",
            "j",
            "2j^2-j",
            "D",
            "never",
        ),
        (
            4,
            "C_j",
            "Sp(j,C)",
            "Sp(j)xSp(j)",
            "diag Sp(j)",
            "j",
            "2j^2+j",
            "C",
            "never",
        ),
        (
            5,
            "AIII",
            "SU(p,q)",
            "SU(p+q)",
            "S(U(p)xU(q))",
            "min(p,q)",
            "2pq",
            "B (p<q) / C (p=q)",
            "p<q",
        ),
        (
            6,
            "AI",
            "SL(j,R)",
            "SU(j)",
            "SO(j)",
            "j-1",
            "(j-1)(j+2)/2",
            "A",
            "never",
        ),
        (
            7, "AII", "SU*(2j)", "SU(2j)", "Sp(j)", "j-1", "2j^2-j-1", "A", "never",
        ),
        (
            8,
            "BDI",
            "SO_o(p,q)",
            "SO(p+q)",
            "SO(p)xSO(q)",
            "min(p,q)",
            "pq",
            "B (p!=q) / D (p=q)",
            "never",
        ),
        (
            9,
            "DIII",
            "SO*(2j)",
            "SO(2j)",
            "U(j)",
            "[j/2]",
            "j(j-1)",
            "B (j odd) / C (j even)",
            "j odd",
        ),
        (
            10,
            "CII",
            "Sp(p,q)",
            "Sp(p+q)",
            "Sp(p)xSp(q)",
            "min(p,q)",
            "4pq",
            "B (p<q) / C (p=q)",
            "p<q",
        ),
        (
            11, "CI", "Sp(j,R)", "Sp(j)", "U(j)", "j", "j(j+1)", "C", "never",
        ),
    ];
    rows.iter()
        .map(|(row, label, gnc, gc, k, rank, dim, half, nonred)| {
            json!({
                "row": row,
                "label": label,
                "g_noncompact": gnc,
                "g_compact": gc,
                "k": k,
                "rank": rank,
                "dim": dim,
                "sigma_half_type": half,
                "nonreduced_when": nonred,
            })
        })
        .collect()
}

/// Filter a (possibly nonreduced) root set down to `{alpha : 2 alpha not in set}`.
pub fn sigma_two_filter(roots: &BTreeSet<CoordVector>) -> BTreeSet<CoordVector> {
    roots
        .iter()
        .filter(|alpha| !roots.contains(&alpha.scale(&rat(2))))
        .cloned()
        .collect()
}

/// The reduced system Sigma_2 of a catalog entry as a built context: the
/// entry's own type when reduced, type C at the same rank when the
/// half-system is a nonreduced type-B shell.
pub fn sigma_two(entry: &SymSpaceEntry) -> Result<RootSystemCtx> {
    if entry.nonreduced {
        if entry.sigma_half_type != ClassicalType::B {
            return Err(Error::internal("nonreduced entry with non-B half system"));
        }
        build_with(ClassicalType::C, entry.sigma_half_rank, true)
    } else {
        build_with(entry.sigma_half_type, entry.sigma_half_rank, true)
    }
}

/// Class-one fundamental weights: the solutions of
/// `<xi_i, alpha_j> / <alpha_j, alpha_j> = delta_{ij}` over the simple roots
/// of the reduced system (type A solutions are canonicalized traceless).
#[derive(Debug, Clone)]
pub struct ClassOneWeights {
    pub ty: ClassicalType,
    pub rank: usize,
    pub ambient_dim: usize,
    pub xi: Vec<CoordVector>,
}

pub fn class_one_weights(ctx: &RootSystemCtx) -> Result<ClassOneWeights> {
    let r = ctx.rank;
    let n = ctx.ambient_dim;
    let traceless = ctx.classical_type == ClassicalType::A;
    let mut xi = Vec::with_capacity(r);
    for i in 0..r {
        // Rows: <xi, alpha_j> = delta_{ij} <alpha_j, alpha_j>, plus the trace row for A.
        let mut a: Vec<Vec<Rational>> = ctx
            .simple_roots
            .iter()
            .map(|alpha| alpha.0.clone())
            .collect();
        let mut b: Vec<Rational> = (0..r)
            .map(|j| {
                if i == j {
                    ctx.simple_roots[j].norm_sq()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        if traceless {
            a.push(vec![Rational::one(); n]);
            b.push(Rational::zero());
        }
        let solution = crate::linalg::solve(&a, &b)?;
        xi.push(CoordVector(solution));
    }
    Ok(ClassOneWeights {
        ty: ctx.classical_type,
        rank: r,
        ambient_dim: n,
        xi,
    })
}

impl ClassOneWeights {
    /// Integrality against the whole positive system:
    /// `<xi_i, alpha> / <alpha, alpha>` is a nonnegative integer.
    pub fn integrality_holds(&self, ctx: &RootSystemCtx) -> bool {
        self.xi.iter().all(|xi| {
            ctx.positive_roots.iter().all(|alpha| {
                let ratio = xi.dot(alpha) / alpha.norm_sq();
                crate::ratio::is_nonneg_integer(&ratio)
            })
        })
    }

    /// Membership of `mu` in the nonnegative integer span of the weights;
    /// returns the coefficient vector when it exists.
    pub fn class_one_coefficients(&self, mu: &CoordVector) -> Option<Vec<u64>> {
        let mut a: Vec<Vec<Rational>> = (0..self.ambient_dim)
            .map(|row| (0..self.rank).map(|j| self.xi[j].0[row].clone()).collect())
            .collect();
        let mut b = mu.0.clone();
        if self.ty == ClassicalType::A {
            // Functionals on the traceless space are defined modulo the trace
            // direction; compare traceless representatives.
            let mu_t = mu.tracelessized();
            b = mu_t.0;
            a = (0..self.ambient_dim)
                .map(|row| {
                    (0..self.rank)
                        .map(|j| self.xi[j].tracelessized().0[row].clone())
                        .collect()
                })
                .collect();
        }
        let coeffs = crate::linalg::solve(&a, &b).ok()?;
        coeffs
            .iter()
            .map(|c| {
                crate::ratio::as_integer(c).and_then(|z| {
                    if z.is_negative() {
                        None
                    } else {
                        u64::try_from(z).ok()
                    }
                })
            })
            .collect()
    }

    /// `mu = sum I_j xi_j` for an I-vector of nonnegative integers.
    pub fn weight_for(&self, coeffs: &[u64]) -> Result<CoordVector> {
        if coeffs.len() != self.rank {
            return Err(Error::DimensionMismatch(coeffs.len(), self.rank));
        }
        let mut mu = CoordVector::zero(self.ambient_dim);
        for (j, &c) in coeffs.iter().enumerate() {
            mu = mu.add(&self.xi[j].scale(&rat(c as i64)));
        }
        Ok(mu)
    }
}

#[derive(Debug, Clone)]
pub struct XiRestrictionReport {
    pub ty: ClassicalType,
    pub small_rank: usize,
    pub large_rank: usize,
    pub restriction_matches: bool,
    pub unique: bool,
    pub pass: bool,
}

/// Each small class-one weight is the restriction of exactly one large one,
/// at the matching diagram index.
pub fn check_xi_restriction(pair: &PropagationPair) -> Result<XiRestrictionReport> {
    let small = class_one_weights(&pair.small)?;
    let large = class_one_weights(&pair.large)?;
    let canon = |v: &CoordVector| {
        if pair.ty == ClassicalType::A {
            v.tracelessized()
        } else {
            v.clone()
        }
    };
    let mut restriction_matches = true;
    let mut unique = true;
    for j in 0..small.rank {
        let restricted = canon(&pair.embedding.project(&large.xi[j])?);
        if restricted != canon(&small.xi[j]) {
            restriction_matches = false;
        }
        for i in 0..large.rank {
            if i != j {
                let other = canon(&pair.embedding.project(&large.xi[i])?);
                if other == canon(&small.xi[j]) {
                    unique = false;
                }
            }
        }
    }
    let pass = restriction_matches && unique;
    Ok(XiRestrictionReport {
        ty: pair.ty,
        small_rank: pair.small.rank,
        large_rank: pair.large.rank,
        restriction_matches,
        unique,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_construction_and_identity() {
        let pair = make_pair(ClassicalType::B, 2, 4).unwrap();
        assert_eq!(
            pair.embedding.project(&pair.large.simple_roots[0]).unwrap(),
            pair.small.simple_roots[0]
        );
        assert!(make_pair(ClassicalType::A, 3, 3).is_ok());
        let pair = make_pair(ClassicalType::D, 4, 6).unwrap();
        let a2 = pair.embedding.project(&pair.large.simple_roots[1]).unwrap();
        assert_eq!(a2, pair.small.simple_roots[1]);
    }

    #[test]
    fn product_pairs_compose_factor_wise() {
        let pairs =
            make_product_pairs(&[(ClassicalType::A, 1, 3), (ClassicalType::B, 2, 2)]).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].large.rank, 3);
        assert_eq!(pairs[1].small.rank, pairs[1].large.rank);
        assert!(make_product_pairs(&[(ClassicalType::D, 4, 3)]).is_err());
    }

    #[test]
    fn catalog_rows() {
        let e = catalog_lookup(Family::BDI, FamilyParams::PQ { p: 3, q: 5 }).unwrap();
        assert_eq!(e.rank, 3);
        assert_eq!(e.dim, 15);
        assert_eq!(e.sigma_half_type, ClassicalType::B);
        assert!(!e.nonreduced);

        let e = catalog_lookup(Family::AI, FamilyParams::J(4)).unwrap();
        assert_eq!(e.rank, 3);
        assert_eq!(e.dim, 9);

        let e = catalog_lookup(Family::CII, FamilyParams::PQ { p: 1, q: 3 }).unwrap();
        assert!(e.nonreduced);
        assert_eq!(e.sigma_half_type, ClassicalType::B);

        let e = catalog_lookup(Family::DIII, FamilyParams::J(5)).unwrap();
        assert!(e.nonreduced);
        assert_eq!(e.rank, 2);

        let e = catalog_lookup(Family::AIII, FamilyParams::PQ { p: 2, q: 2 }).unwrap();
        assert!(!e.nonreduced);
        assert_eq!(e.sigma_half_type, ClassicalType::C);

        assert_eq!(catalog_families().len(), 11);
    }

    #[test]
    fn sigma_two_behaviour() {
        // Reduced input: unchanged.
        let ctx = crate::rootsys::build(ClassicalType::B, 2).unwrap();
        assert_eq!(sigma_two_filter(&ctx.roots), ctx.roots);

        // BC-like rank-1 set {+-f_1, +-2f_1} reduces to {+-2f_1}.
        let f1 = CoordVector::basis(1, 0);
        let mut roots = BTreeSet::new();
        roots.insert(f1.clone());
        roots.insert(f1.neg());
        roots.insert(f1.scale(&rat(2)));
        roots.insert(f1.scale(&rat(-2)));
        let reduced = sigma_two_filter(&roots);
        let c1 = crate::rootsys::build_permissive(ClassicalType::C, 1).unwrap();
        assert_eq!(reduced, c1.roots);

        // Nonreduced catalog entry of type-B half system maps to type C.
        let e = catalog_lookup(Family::AIII, FamilyParams::PQ { p: 2, q: 4 }).unwrap();
        let ctx = sigma_two(&e).unwrap();
        assert_eq!(ctx.classical_type, ClassicalType::C);
        assert_eq!(ctx.rank, 2);
    }

    #[test]
    fn class_one_weights_b2_c2() {
        let b2 = crate::rootsys::build(ClassicalType::B, 2).unwrap();
        let w = class_one_weights(&b2).unwrap();
        assert_eq!(w.xi[0], CoordVector::from_i64(&[1, 1]));
        assert_eq!(w.xi[1], CoordVector::from_i64(&[0, 2]));
        assert!(w.integrality_holds(&b2));

        // C_2 under the delta normalization (no factor 2): twice the usual
        // fundamental weights.
        let c2 = crate::rootsys::build_permissive(ClassicalType::C, 2).unwrap();
        let w = class_one_weights(&c2).unwrap();
        assert_eq!(w.xi[0], CoordVector::from_i64(&[2, 2]));
        assert_eq!(w.xi[1], CoordVector::from_i64(&[0, 2]));
        assert!(w.integrality_holds(&c2));
    }

    #[test]
    fn semilattice_membership() {
        let b2 = crate::rootsys::build(ClassicalType::B, 2).unwrap();
        let w = class_one_weights(&b2).unwrap();
        let mu = w.weight_for(&[2, 1]).unwrap();
        assert_eq!(w.class_one_coefficients(&mu), Some(vec![2, 1]));
        let half = w.xi[0].scale(&crate::ratio::frac(1, 2));
        assert_eq!(w.class_one_coefficients(&half), None);
    }

    #[test]
    fn xi_restriction_pairs() {
        // B, 2 -> 3: xi_{3,1} = f_1+f_2+f_3 restricts to f_1+f_2.
        let pair = make_pair(ClassicalType::B, 2, 3).unwrap();
        let large = class_one_weights(&pair.large).unwrap();
        assert_eq!(large.xi[0], CoordVector::from_i64(&[1, 1, 1]));
        let r = check_xi_restriction(&pair).unwrap();
        assert!(r.pass);

        for ty in [
            ClassicalType::A,
            ClassicalType::B,
            ClassicalType::C,
            ClassicalType::D,
        ] {
            let n0 = ty.min_rank(true);
            let pair = make_pair(ty, n0 + 1, n0 + 3).unwrap();
            assert!(check_xi_restriction(&pair).unwrap().pass, "{ty:?}");
        }

        // Identity pair is trivially unique.
        let pair = make_pair(ClassicalType::C, 3, 3).unwrap();
        assert!(check_xi_restriction(&pair).unwrap().pass);
    }
}
