//! Injectivity radii and the convex domains controlling spherical support.
//!
//! Points carry coordinates as exact rational multiples of pi, so every
//! membership test is a rational comparison (pi cancels). Bounds below are in
//! those pi units: the defining inequality `|alpha(X)| < pi/2` becomes
//! `|alpha(x)| < 1/2`.

use num::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::coord::CoordVector;
use crate::error::{Error, Result};
use crate::ratio::{frac, rat, rat_str, Rational};
use crate::rootsys::{build_with, coroot_lengths, ClassicalType, RootSystemCtx};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaKind {
    Omega,
    OmegaStar,
}

#[derive(Debug, Clone)]
pub struct Facet {
    pub normal: CoordVector,
    pub bound: Rational,
    pub strict: bool,
}

/// Intersection of half-spaces `<normal, x> < bound` (or `<=`), symmetric
/// under negation, with an optional trace-zero constraint for type A.
#[derive(Debug, Clone)]
pub struct HPolytope {
    pub inequalities: Vec<Facet>,
    pub traceless: bool,
}

impl HPolytope {
    fn from_symmetric_normals(normals: Vec<CoordVector>, bound: Rational, traceless: bool) -> Self {
        let mut inequalities = Vec::with_capacity(normals.len() * 2);
        for n in normals {
            inequalities.push(Facet {
                normal: n.neg(),
                bound: bound.clone(),
                strict: true,
            });
            inequalities.push(Facet {
                normal: n,
                bound: bound.clone(),
                strict: true,
            });
        }
        HPolytope {
            inequalities,
            traceless,
        }
    }

    pub fn contains(&self, x: &CoordVector) -> bool {
        if self.traceless && !x.is_traceless() {
            return false;
        }
        self.inequalities.iter().all(|f| {
            let v = f.normal.dot(x);
            if f.strict {
                v < f.bound
            } else {
                v <= f.bound
            }
        })
    }

    /// The scale `t* > 0` at which `t x` first touches a facet, for interior
    /// directions with some facet functional nonzero.
    pub fn first_contact_scale(&self, x: &CoordVector) -> Option<Rational> {
        let mut best: Option<Rational> = None;
        for f in &self.inequalities {
            let v = f.normal.dot(x);
            if v.is_positive() {
                let t = &f.bound / &v;
                best = Some(match best {
                    None => t,
                    Some(b) => {
                        if t < b {
                            t
                        } else {
                            b
                        }
                    }
                });
            }
        }
        best
    }
}

/// `Omega = { |alpha(x)| < 1/2 for all roots alpha }` in pi units.
pub fn omega(ctx: &RootSystemCtx) -> HPolytope {
    HPolytope::from_symmetric_normals(
        ctx.positive_roots.clone(),
        frac(1, 2),
        ctx.classical_type == ClassicalType::A,
    )
}

/// The smaller Weyl-invariant domain: equal to `Omega` for types A and C,
/// the box `|x_j| < 1/4` for type B, and `|x_i +- x_j| < 1/4` for type D.
pub fn omega_star(ctx: &RootSystemCtx) -> HPolytope {
    let n = ctx.ambient_dim;
    match ctx.classical_type {
        ClassicalType::A => omega(ctx),
        ClassicalType::C | ClassicalType::B => {
            let normals = (0..n).map(|i| CoordVector::basis(n, i)).collect();
            HPolytope::from_symmetric_normals(normals, frac(1, 4), false)
        }
        ClassicalType::D => {
            let mut normals = Vec::new();
            for i in 0..n {
                for j in 0..i {
                    normals.push(CoordVector::basis(n, i).add(&CoordVector::basis(n, j)));
                    normals.push(CoordVector::basis(n, i).sub(&CoordVector::basis(n, j)));
                }
            }
            HPolytope::from_symmetric_normals(normals, frac(1, 4), false)
        }
    }
}

pub fn omega_membership(kind: OmegaKind, ctx: &RootSystemCtx, x: &CoordVector) -> bool {
    match kind {
        OmegaKind::Omega => omega(ctx).contains(x),
        OmegaKind::OmegaStar => omega_star(ctx).contains(x),
    }
}

/// Exact value `coeff * sqrt(2)^{sqrt2} * pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtScaledPi {
    pub coeff: Rational,
    pub sqrt2: bool,
}

impl SqrtScaledPi {
    /// Express `sqrt(s) * pi` exactly when `s` is a square or twice a square.
    pub fn from_squared(s: &Rational) -> Result<Self> {
        let try_sqrt = |v: &Rational| -> Option<Rational> {
            let n = v.numer().sqrt();
            let d = v.denom().sqrt();
            let cand = Rational::new(n, d);
            if &(&cand * &cand) == v {
                Some(cand)
            } else {
                None
            }
        };
        if let Some(r) = try_sqrt(s) {
            return Ok(SqrtScaledPi {
                coeff: r,
                sqrt2: false,
            });
        }
        let half = s / rat(2);
        if let Some(r) = try_sqrt(&half) {
            return Ok(SqrtScaledPi {
                coeff: r,
                sqrt2: true,
            });
        }
        Err(Error::internal(format!(
            "{} is neither a square nor twice a square",
            rat_str(s)
        )))
    }

    pub fn display(&self) -> String {
        if self.sqrt2 {
            format!("{}*sqrt(2)*pi", rat_str(&self.coeff))
        } else {
            format!("{}*pi", rat_str(&self.coeff))
        }
    }
}

#[derive(Debug, Clone)]
pub struct RadiusReport {
    pub ty: ClassicalType,
    pub rank: usize,
    pub coroot_sq_lengths: Vec<Rational>,
    /// Minimum coroot length times pi, symbolically.
    pub radius: SqrtScaledPi,
}

/// Injectivity radius `R = min_j pi |t_j|` over the simple coroots in the
/// trace-form metric.
pub fn injectivity_radius(ty: ClassicalType, rank: usize) -> Result<RadiusReport> {
    let ctx = build_with(ty, rank, true)?;
    let lengths = coroot_lengths(&ctx);
    let min_sq = lengths
        .iter()
        .map(|c| c.squared_length.clone())
        .min()
        .ok_or_else(|| Error::internal("no simple roots"))?;
    Ok(RadiusReport {
        ty,
        rank,
        coroot_sq_lengths: lengths.into_iter().map(|c| c.squared_length).collect(),
        radius: SqrtScaledPi::from_squared(&min_sq)?,
    })
}

/// The radius table of the theorem: `sqrt(2) pi` for A and C, `2 pi` for B and D.
pub fn expected_radius(ty: ClassicalType) -> SqrtScaledPi {
    match ty {
        ClassicalType::A | ClassicalType::C => SqrtScaledPi {
            coeff: Rational::one(),
            sqrt2: true,
        },
        ClassicalType::B | ClassicalType::D => SqrtScaledPi {
            coeff: rat(2),
            sqrt2: false,
        },
    }
}

fn sample_point(rng: &mut ChaCha8Rng, n: usize, box_bound: &Rational) -> CoordVector {
    // Rational samples with denominator up to 64, scaled into (-b, b) per
    // coordinate, slightly over-extended so boundary-adjacent points occur.
    let scale = box_bound * frac(9, 8);
    CoordVector(
        (0..n)
            .map(|_| {
                let num = rng.gen_range(-64i64..=64);
                let den = rng.gen_range(1i64..=64);
                let r = Rational::new(num.into(), (64 * den).into());
                // r in [-1, 1] roughly; scale.
                r * &scale
            })
            .collect(),
    )
}

/// Exact certificate that one positive root's inequality follows from the
/// facet inequalities: a decomposition `alpha = sum c_m phi_m` over facet
/// normals with `sum |c_m| bound_m <= 1/2`.
fn root_certificate(ctx: &RootSystemCtx, alpha: &CoordVector) -> Result<()> {
    let half = frac(1, 2);
    let budget: Rational;
    match ctx.classical_type {
        ClassicalType::A => {
            // Facets of Omega* are the root inequalities themselves.
            budget = half.clone();
            let _ = budget;
            return Ok(());
        }
        ClassicalType::B | ClassicalType::C => {
            // Facets |x_m| < 1/4: alpha = sum alpha_m f_m with sum |alpha_m| <= 2.
            let l1: Rational = alpha
                .0
                .iter()
                .map(|c| c.abs())
                .fold(Rational::zero(), |a, b| a + b);
            let cost = l1 * frac(1, 4);
            if cost <= half {
                return Ok(());
            }
        }
        ClassicalType::D => {
            // Facets |x_i +- x_j| < 1/4: every root is itself a facet normal.
            let cost = frac(1, 4);
            if cost <= half {
                return Ok(());
            }
        }
    }
    Err(Error::internal(format!(
        "no facet certificate for root {alpha}"
    )))
}

#[derive(Debug, Clone)]
pub struct OmegaSubsetReport {
    pub ty: ClassicalType,
    pub rank: usize,
    pub samples: usize,
    pub members_checked: usize,
    pub violations: usize,
    pub certificate_ok: bool,
    pub boundary_probes_ok: bool,
    pub pass: bool,
}

/// `Omega* subset Omega`: a per-root exact certificate from the highest-root
/// mark bound, a randomized exact cross-check, and directed boundary probes
/// verifying strictness.
pub fn check_omega_star_subset(
    ty: ClassicalType,
    rank: usize,
    samples: usize,
    seed: u64,
) -> Result<OmegaSubsetReport> {
    let ctx = build_with(ty, rank, true)?;
    let big = omega(&ctx);
    let small = omega_star(&ctx);

    let mut certificate_ok = true;
    for alpha in &ctx.positive_roots {
        if root_certificate(&ctx, alpha).is_err() {
            certificate_ok = false;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members = 0usize;
    let mut violations = 0usize;
    let bound = frac(1, 2);
    for _ in 0..samples {
        let mut x = sample_point(&mut rng, ctx.ambient_dim, &bound);
        if ctx.classical_type == ClassicalType::A {
            x = x.tracelessized();
        }
        if small.contains(&x) {
            members += 1;
            if !big.contains(&x) {
                violations += 1;
            }
        }
    }

    // Boundary strictness: scale interior points to first facet contact.
    let mut boundary_probes_ok = true;
    for _ in 0..32 {
        let mut x = sample_point(&mut rng, ctx.ambient_dim, &frac(1, 16));
        if ctx.classical_type == ClassicalType::A {
            x = x.tracelessized();
        }
        if !small.contains(&x) || x.is_zero() {
            continue;
        }
        if let Some(t) = small.first_contact_scale(&x) {
            let contact = x.scale(&t);
            if small.contains(&contact) {
                boundary_probes_ok = false;
            }
            // Just inside the contact scale stays inside.
            let inside = x.scale(&(t * frac(999, 1000)));
            if !small.contains(&inside) {
                boundary_probes_ok = false;
            }
        }
    }

    let pass = certificate_ok && violations == 0 && boundary_probes_ok && members > 0;
    Ok(OmegaSubsetReport {
        ty,
        rank,
        samples,
        members_checked: members,
        violations,
        certificate_ok,
        boundary_probes_ok,
        pass,
    })
}

#[derive(Debug, Clone)]
pub struct OmegaPropagationReport {
    pub ty: ClassicalType,
    pub small_rank: usize,
    pub large_rank: usize,
    pub samples: usize,
    pub equivalence_violations: usize,
    pub type_a_bound_ok: bool,
    pub directed_probes_ok: bool,
    pub pass: bool,
}

/// `Omega*_n = Omega*_k cap a_n`: sampled equivalence between membership of
/// `x` and of its padding, the type-A proof inequality checked exactly on
/// members, and near-boundary directed probes.
pub fn check_omega_star_propagation(
    pair: &crate::propagation::PropagationPair,
    samples: usize,
    seed: u64,
) -> Result<OmegaPropagationReport> {
    let small = omega_star(&pair.small);
    let large = omega_star(&pair.large);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0usize;
    let mut type_a_bound_ok = true;
    let bound = frac(1, 2);

    let canon_small = |x: &CoordVector| -> CoordVector {
        if pair.ty == ClassicalType::A {
            x.tracelessized()
        } else {
            x.clone()
        }
    };
    // Padding a traceless small vector is not traceless in the large ambient
    // space for type A; the subspace copy is the set of large traceless
    // vectors supported below, i.e. pad then re-tracelessize is wrong. The
    // padded vector IS traceless already (sum unchanged by zero padding).
    for _ in 0..samples {
        let x = canon_small(&sample_point(&mut rng, pair.small.ambient_dim, &bound));
        let padded = pair.embedding.pad(&x)?;
        let in_small = small.contains(&x);
        let in_large = large.contains(&padded);
        if in_small != in_large {
            violations += 1;
        }
        if in_small && pair.ty == ClassicalType::A {
            // (r_k + 1) |x_i| < r_k / 2 in pi units.
            let rk = rat(pair.large.rank as i64);
            let lhs_bound = &rk * frac(1, 2);
            for c in &x.0 {
                if (rk.clone() + Rational::one()) * c.abs() >= lhs_bound {
                    type_a_bound_ok = false;
                }
            }
        }
    }

    // Directed probes: near-boundary members still satisfy the equivalence.
    let mut directed_probes_ok = true;
    for _ in 0..32 {
        let x = canon_small(&sample_point(
            &mut rng,
            pair.small.ambient_dim,
            &frac(1, 16),
        ));
        if x.is_zero() {
            continue;
        }
        if let Some(t) = small.first_contact_scale(&x) {
            let probe = x.scale(&(t.clone() * frac(999, 1000)));
            let padded = pair.embedding.pad(&probe)?;
            if small.contains(&probe) != large.contains(&padded) {
                directed_probes_ok = false;
            }
            // Past the contact the point leaves the small domain, and by the
            // intersection identity its padding must leave the large one.
            let outside = x.scale(&(t * frac(1001, 1000)));
            let padded_out = pair.embedding.pad(&outside)?;
            if small.contains(&outside) || large.contains(&padded_out) {
                directed_probes_ok = false;
            }
        }
    }

    let pass = violations == 0 && type_a_bound_ok && directed_probes_ok;
    Ok(OmegaPropagationReport {
        ty: pair.ty,
        small_rank: pair.small.rank,
        large_rank: pair.large.rank,
        samples,
        equivalence_violations: violations,
        type_a_bound_ok,
        directed_probes_ok,
        pass,
    })
}

#[derive(Debug, Clone)]
pub struct SupportRadiusBound {
    pub ty: ClassicalType,
    pub rank: usize,
    /// Squared inradius of Omega* under the realization metric, in pi^2 units.
    pub r_squared: Rational,
    pub display: String,
}

/// Inscribed-ball lower bound for the support constant: the distance from the
/// origin to the nearest Omega* facet under the realization metric. This is a
/// lower bound for the constant in the support theorem, not a sharp value.
pub fn support_radius_bound(ty: ClassicalType, rank: usize) -> Result<SupportRadiusBound> {
    let ctx = build_with(ty, rank, true)?;
    let star = omega_star(&ctx);
    let mut best: Option<Rational> = None;
    for f in &star.inequalities {
        // min ||x||_g subject to <phi, x> = b has squared value s b^2 / |phi|^2.
        let mut normal = f.normal.clone();
        if star.traceless {
            normal = normal.tracelessized();
        }
        let denom = normal.norm_sq();
        if denom.is_zero() {
            continue;
        }
        let val = ctx.metric_scale.clone() * &f.bound * &f.bound / denom;
        best = Some(match best {
            None => val,
            Some(b) => {
                if val < b {
                    val
                } else {
                    b
                }
            }
        });
    }
    let r_squared = best.ok_or_else(|| Error::internal("no facets"))?;
    let display = match SqrtScaledPi::from_squared(&r_squared) {
        Ok(s) => s.display(),
        Err(_) => format!("sqrt({})*pi", rat_str(&r_squared)),
    };
    Ok(SupportRadiusBound {
        ty,
        rank,
        r_squared,
        display,
    })
}

pub fn radius_report_json(r: &RadiusReport) -> serde_json::Value {
    json!({
        "type": r.ty.letter().to_string(),
        "rank": r.rank,
        "coroot_sq_lengths": r.coroot_sq_lengths.iter().map(rat_str).collect::<Vec<_>>(),
        "radius": r.radius.display(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::make_pair;

    fn pt(coords: &[Rational]) -> CoordVector {
        CoordVector(coords.to_vec())
    }

    #[test]
    fn radii_match_theorem() {
        for (ty, first) in [
            (ClassicalType::A, 1usize),
            (ClassicalType::B, 2),
            (ClassicalType::C, 1),
            (ClassicalType::D, 2),
        ] {
            for rank in first..=8 {
                let r = injectivity_radius(ty, rank).unwrap();
                assert_eq!(r.radius, expected_radius(ty), "{ty:?}_{rank}");
            }
        }
    }

    #[test]
    fn omega_star_membership_examples() {
        let b3 = build_with(ClassicalType::B, 3, false).unwrap();
        let x = pt(&[frac(1, 8), frac(1, 8), frac(1, 8)]);
        assert!(omega_membership(OmegaKind::OmegaStar, &b3, &x));
        let boundary = pt(&[frac(1, 4), rat(0), rat(0)]);
        assert!(!omega_membership(OmegaKind::OmegaStar, &b3, &boundary));

        let d4 = build_with(ClassicalType::D, 4, false).unwrap();
        let x = pt(&[frac(1, 8), frac(1, 8), rat(0), rat(0)]);
        // |x_1 + x_2| = 1/4 sits on the boundary, strictness excludes it.
        assert!(!omega_membership(OmegaKind::OmegaStar, &d4, &x));
        let x = pt(&[frac(1, 9), frac(1, 9), rat(0), rat(0)]);
        assert!(omega_membership(OmegaKind::OmegaStar, &d4, &x));
    }

    #[test]
    fn subset_checks_pass() {
        for (ty, rank) in [
            (ClassicalType::A, 2),
            (ClassicalType::B, 3),
            (ClassicalType::C, 3),
            (ClassicalType::D, 4),
        ] {
            let r = check_omega_star_subset(ty, rank, 500, 42).unwrap();
            assert!(r.pass, "{r:?}");
            assert!(r.members_checked > 0);
        }
    }

    #[test]
    fn propagation_checks_pass() {
        for (ty, n, k) in [
            (ClassicalType::B, 2, 4),
            (ClassicalType::A, 1, 3),
            (ClassicalType::D, 4, 6),
            (ClassicalType::C, 3, 5),
        ] {
            let pair = make_pair(ty, n, k).unwrap();
            let r = check_omega_star_propagation(&pair, 500, 7).unwrap();
            assert!(r.pass, "{r:?}");
        }
        // Identity pair: trivial equivalence.
        let pair = make_pair(ClassicalType::B, 3, 3).unwrap();
        assert!(check_omega_star_propagation(&pair, 100, 1).unwrap().pass);
    }

    #[test]
    fn weyl_invariance_of_membership() {
        use crate::weylgrp::WeylGroup;
        let ctx = build_with(ClassicalType::B, 3, false).unwrap();
        let group = WeylGroup::new(ctx.clone(), false).unwrap();
        let elements: Vec<_> = group.enumerate().unwrap().iter().cloned().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..200 {
            let x = sample_point(&mut rng, 3, &frac(1, 2));
            let w = &elements[i % elements.len()];
            let wx = w.apply(&x);
            assert_eq!(
                omega_membership(OmegaKind::Omega, &ctx, &x),
                omega_membership(OmegaKind::Omega, &ctx, &wx)
            );
            assert_eq!(
                omega_membership(OmegaKind::OmegaStar, &ctx, &x),
                omega_membership(OmegaKind::OmegaStar, &ctx, &wx)
            );
        }
    }

    #[test]
    fn support_radius_values() {
        // B/C: box bound 1/4, metric scale 2: r^2 = 2 * (1/4)^2 = 1/8.
        let r = support_radius_bound(ClassicalType::B, 3).unwrap();
        assert_eq!(r.r_squared, frac(1, 8));
        // D: facet |x_i + x_j| = 1/4 with |phi|^2 = 2: r^2 = 2 * (1/16) / 2 = 1/16.
        let r = support_radius_bound(ClassicalType::D, 4).unwrap();
        assert_eq!(r.r_squared, frac(1, 16));
        assert_eq!(r.display, "1/4*pi");
    }
}
