//! Polynomial-level Paley-Wiener machinery: the rho-shifted alternating
//! space, the isomorphism `T` onto invariants, the restriction operator along
//! propagation pairs, the coefficient operator on class-one evaluation grids,
//! and the dimension identity feeding the surjectivity argument.
//!
//! Everything acts on polynomials by the analytic formulas, so each verified
//! identity is formula-level; growth conditions are out of scope here.

use std::collections::BTreeMap;

use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coord::CoordVector;
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::propagation::{class_one_weights, PropagationPair};
use crate::ratio::{rat, Rational};
use crate::rootsys::{varpi_at, ClassicalType, RootSystemCtx};
use crate::weylgrp::{SignedPerm, WeylGroup};

/// Polynomial satisfying the shifted alternating law
/// `Phi(w(lambda + rho) - rho) = det(w) Phi(lambda)` for all `w` in the
/// (possibly extended) Weyl group; verified on generators at construction.
#[derive(Debug, Clone)]
pub struct RhoAltPoly {
    pub extended: bool,
    pub poly: SparsePoly,
}

/// Polynomial fixed by the (possibly extended) Weyl group.
#[derive(Debug, Clone)]
pub struct SymPoly {
    pub extended: bool,
    pub poly: SparsePoly,
}

/// Compose a polynomial with the affine map `lambda -> w(lambda + rho) - rho`.
/// The map is the linear action followed by translation by `w(rho) - rho`
/// (which is supported on at most a few coordinates for generators), so this
/// runs as a cheap exponent remap plus a sparse binomial translation.
pub fn shifted_action(ctx: &RootSystemCtx, w: &SignedPerm, p: &SparsePoly) -> Result<SparsePoly> {
    let n = ctx.ambient_dim;
    if p.nvars() != n {
        return Err(Error::DimensionMismatch(p.nvars(), n));
    }
    // p(w lambda + d) = (translate(p, d))(w lambda).
    let d = w.apply(&ctx.rho).sub(&ctx.rho);
    let translated = p.translate(&d.0)?;
    translated.act_signed_perm(&w.inverse())
}

fn group_for(ctx: &RootSystemCtx, extended: bool) -> Result<WeylGroup> {
    WeylGroup::new(ctx.clone(), extended)
}

/// The character by which the root product transforms:
/// `varpi(w lambda) = alt_sign(w) varpi(lambda)`. On the plain Weyl group
/// this is the determinant. On the extended type-D group the root product is
/// invariant under odd sign changes while their determinant is -1, so the
/// coherent character is the sign of the permutation part. (This is the
/// multiplier that makes the shifted alternating space, the vanishing lemma,
/// and the isomorphism onto invariants one consistent package; the holomorphic
/// extensions of transforms of extended-invariant central functions satisfy
/// exactly this law.)
pub fn alt_sign(ctx: &RootSystemCtx, extended: bool, w: &SignedPerm) -> i64 {
    if extended && ctx.classical_type == ClassicalType::D {
        w.perm_sign() as i64
    } else {
        w.det() as i64
    }
}

/// Verify the shifted alternating law on every generator.
pub fn is_rho_alternating(ctx: &RootSystemCtx, extended: bool, p: &SparsePoly) -> Result<bool> {
    let group = group_for(ctx, extended)?;
    for g in group.generators() {
        let lhs = shifted_action(ctx, g, p)?;
        let rhs = p.scale(&rat(alt_sign(ctx, extended, g)));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verify plain invariance on every generator.
pub fn is_invariant(ctx: &RootSystemCtx, extended: bool, p: &SparsePoly) -> Result<bool> {
    let group = group_for(ctx, extended)?;
    for g in group.generators() {
        if &p.act_signed_perm(g)? != p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Phi(lambda) = sum_w alt_sign(w) seed(w(lambda + rho) - rho)`: satisfies
/// the shifted alternating law by construction; a degenerate seed
/// (identically zero sum) is an error the caller retries past.
pub fn alt_symmetrize(
    ctx: &RootSystemCtx,
    extended: bool,
    seed_poly: &SparsePoly,
) -> Result<RhoAltPoly> {
    let group = group_for(ctx, extended)?;
    let mut acc = SparsePoly::zero(ctx.ambient_dim);
    for w in group.enumerate()? {
        let term = shifted_action(ctx, w, seed_poly)?;
        let term = term.scale(&rat(alt_sign(ctx, extended, w)));
        acc = acc.add(&term)?;
    }
    if acc.is_zero() {
        return Err(Error::DegenerateSeed);
    }
    if !is_rho_alternating(ctx, extended, &acc)? {
        return Err(Error::internal("alternating construction violated its law"));
    }
    Ok(RhoAltPoly {
        extended,
        poly: acc,
    })
}

/// Substitute `lambda -> lambda - rho`.
pub fn rho_shift_back(ctx: &RootSystemCtx, p: &SparsePoly) -> Result<SparsePoly> {
    p.translate(&ctx.rho.neg().0)
}

/// Substitute `lambda -> lambda + rho`.
pub fn rho_shift_forward(ctx: &RootSystemCtx, p: &SparsePoly) -> Result<SparsePoly> {
    p.translate(&ctx.rho.0)
}

/// The linear forms `<lambda, alpha>` over the positive roots (the factors
/// of the root product); dividing by them one at a time is much cheaper than
/// dividing by the expanded product.
fn varpi_factors(ctx: &RootSystemCtx) -> Vec<SparsePoly> {
    let n = ctx.ambient_dim;
    ctx.positive_roots
        .iter()
        .map(|alpha| {
            SparsePoly::from_terms(
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
            .expect("linear form")
        })
        .collect()
}

/// Same factors shifted by rho: `<lambda + rho, alpha>`.
fn varpi_factors_shifted(ctx: &RootSystemCtx) -> Vec<SparsePoly> {
    let n = ctx.ambient_dim;
    varpi_factors(ctx)
        .into_iter()
        .zip(&ctx.positive_roots)
        .map(|(lin, alpha)| {
            let c = ctx.rho.dot(alpha);
            lin.add(&SparsePoly::constant(n, c)).expect("affine form")
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct VanishingReport {
    /// Quotient `Phi(lambda - rho) / varpi(lambda)`, when divisible.
    pub quotient: SparsePoly,
    pub divisible: bool,
    /// 1-based index of the first positive root whose pairing failed to
    /// divide, when not divisible.
    pub failed_factor: Option<usize>,
}

/// The vanishing lemma made effective: `Phi(lambda - rho)` must be divisible
/// by every root pairing, i.e. by `varpi`. Non-divisibility falsifies the
/// alternating law and is reported with the offending root.
pub fn vanishing_check(ctx: &RootSystemCtx, phi: &RhoAltPoly) -> Result<VanishingReport> {
    let shifted = rho_shift_back(ctx, &phi.poly)?;
    if shifted.is_zero() {
        return Ok(VanishingReport {
            quotient: shifted,
            divisible: true,
            failed_factor: None,
        });
    }
    let mut quotient = shifted;
    for (i, factor) in varpi_factors(ctx).iter().enumerate() {
        match quotient.exact_divide(factor) {
            Ok(q) => quotient = q,
            Err(Error::NotDivisible { .. }) => {
                return Ok(VanishingReport {
                    quotient: SparsePoly::zero(ctx.ambient_dim),
                    divisible: false,
                    failed_factor: Some(i + 1),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(VanishingReport {
        quotient,
        divisible: true,
        failed_factor: None,
    })
}

/// `T(Phi)(lambda) = varpi(rho) Phi(lambda - rho) / varpi(lambda)`: lands in
/// the invariants; division failure is a falsified vanishing lemma.
pub fn t_op(ctx: &RootSystemCtx, phi: &RhoAltPoly) -> Result<SymPoly> {
    let report = vanishing_check(ctx, phi)?;
    if !report.divisible {
        return Err(Error::NotDivisible {
            remainder_terms: 0,
            leading: "varpi does not divide the shifted polynomial".into(),
        });
    }
    let scaled = report.quotient.scale(&varpi_at(ctx, &ctx.rho));
    if !is_invariant(ctx, phi.extended, &scaled)? {
        return Err(Error::internal("T output is not invariant"));
    }
    Ok(SymPoly {
        extended: phi.extended,
        poly: scaled,
    })
}

/// Inverse of `T`: `Phi(lambda) = varpi(lambda + rho) F(lambda + rho) / varpi(rho)`.
pub fn t_inv(ctx: &RootSystemCtx, f: &SymPoly) -> Result<RhoAltPoly> {
    let mut poly = rho_shift_forward(ctx, &f.poly)?;
    for factor in varpi_factors_shifted(ctx) {
        poly = poly.mul(&factor)?;
    }
    let poly = poly.scale(&varpi_at(ctx, &ctx.rho).recip());
    if !is_rho_alternating(ctx, f.extended, &poly)? {
        return Err(Error::internal(
            "T^{-1} output violates the alternating law",
        ));
    }
    Ok(RhoAltPoly {
        extended: f.extended,
        poly,
    })
}

/// Restriction of an invariant polynomial to the padded small coordinates.
pub fn p_restrict_sym(pair: &PropagationPair, f: &SymPoly) -> Result<SymPoly> {
    let restricted = crate::invariants::restrict_to_padded(&f.poly, pair.small.ambient_dim)?;
    if !is_invariant(&pair.small, f.extended, &restricted)? {
        return Err(Error::internal(
            "restriction of an invariant is not invariant downstairs",
        ));
    }
    Ok(SymPoly {
        extended: f.extended,
        poly: restricted,
    })
}

/// The operator of record on the shifted alternating spaces:
/// `T_n^{-1} ( T_k(Phi) |_small )`.
pub fn p_restrict_alt(pair: &PropagationPair, phi: &RhoAltPoly) -> Result<RhoAltPoly> {
    let f_k = t_op(&pair.large, phi)?;
    let f_n = SymPoly {
        extended: phi.extended,
        poly: crate::invariants::restrict_to_padded(&f_k.poly, pair.small.ambient_dim)?,
    };
    if !is_invariant(&pair.small, phi.extended, &f_n.poly)? {
        return Err(Error::internal("restricted invariant fails downstairs"));
    }
    t_inv(&pair.small, &f_n)
}

/// Finitely supported coefficient sequence over class-one I-vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeq(pub BTreeMap<Vec<u64>, Rational>);

/// Enumerate I-vectors in `(Z^+)^r` with `|I| = sum <= bound`.
fn i_vectors(rank: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; rank];
    fn rec(current: &mut Vec<u64>, pos: usize, left: u64, out: &mut Vec<Vec<u64>>) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[pos] = v;
            rec(current, pos + 1, left - v, out);
        }
        current[pos] = 0;
    }
    rec(&mut current, 0, bound, &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone)]
pub struct CoeffRoutes {
    /// Evaluate the restricted polynomial at `mu_I + rho_n`.
    pub via_restriction: CoeffSeq,
    /// Evaluate the large polynomial at the padded shifted argument.
    pub via_padding: CoeffSeq,
    pub agree: bool,
}

/// The coefficient operator at polynomial level, computed along both
/// evaluation routes: restrict-then-evaluate on the small class-one grid
/// versus pad-then-evaluate upstairs. The routes must agree identically.
pub fn c_coeff(pair: &PropagationPair, f: &SymPoly, bound: u64) -> Result<CoeffRoutes> {
    let restricted = p_restrict_sym(pair, f)?;
    let xi = class_one_weights(&pair.small)?;
    let rho_n = &pair.small.rho;
    let mut via_restriction = BTreeMap::new();
    let mut via_padding = BTreeMap::new();
    for i_vec in i_vectors(pair.small.rank, bound) {
        let mu = xi.weight_for(&i_vec)?;
        let arg_small = mu.add(rho_n);
        let v1 = restricted.poly.eval(&arg_small.0)?;
        let arg_large = pair.embedding.pad(&arg_small)?;
        let v2 = f.poly.eval(&arg_large.0)?;
        via_restriction.insert(i_vec.clone(), v1);
        via_padding.insert(i_vec, v2);
    }
    let agree = via_restriction == via_padding;
    Ok(CoeffRoutes {
        via_restriction: CoeffSeq(via_restriction),
        via_padding: CoeffSeq(via_padding),
        agree,
    })
}

#[derive(Debug, Clone)]
pub struct DimIdentityReport {
    pub checked: usize,
    pub mismatches: usize,
    pub pass: bool,
}

/// The coefficient consequence of the averaging operator: the degree
/// polynomial `varpi(mu + rho) / varpi(rho)` equals the Freudenthal
/// dimension for every dominant integral weight supplied.
pub fn q_dim_identity(ctx: &RootSystemCtx, weights: &[CoordVector]) -> Result<DimIdentityReport> {
    let mut mismatches = 0usize;
    for mu in weights {
        let ratio = varpi_at(ctx, &mu.add(&ctx.rho)) / varpi_at(ctx, &ctx.rho);
        let direct = crate::ratio::as_integer(&ratio);
        let oracle =
            crate::spectral::freudenthal_weights(ctx, mu, crate::spectral::WEIGHT_CAP)?.total();
        if direct != Some(oracle) {
            mismatches += 1;
        }
    }
    Ok(DimIdentityReport {
        checked: weights.len(),
        mismatches,
        pass: mismatches == 0,
    })
}

/// Random polynomial in the given generator list with small integer
/// coefficients: each term is `c * g_i^e` for a single generator (exponent up
/// to `max_pow`), keeping total degrees controlled at higher rank.
fn random_generator_poly(
    rng: &mut ChaCha8Rng,
    generators: &[SparsePoly],
    terms: usize,
    max_pow: u64,
) -> Result<SparsePoly> {
    let n = generators[0].nvars();
    let mut acc = SparsePoly::zero(n);
    for _ in 0..terms {
        let coeff = rat(rng.gen_range(-4i64..=4));
        let which = rng.gen_range(0..generators.len());
        let e = rng.gen_range(1..=max_pow);
        if coeff.is_zero() {
            continue;
        }
        let term = generators[which].pow(e)?.scale(&coeff);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Random invariant polynomial (under `W`, or the extended group for type D)
/// from the characteristic-polynomial generator family. Only low-degree
/// generators are used so transform pipelines stay fast at rank 4.
pub fn random_invariant(ty: ClassicalType, rank: usize, rng: &mut ChaCha8Rng) -> Result<SymPoly> {
    let extended = ty == ClassicalType::D;
    let mut gens = witness_generators(ty, rank)?;
    gens.sort_by_key(|g| g.total_degree().unwrap_or(0));
    gens.truncate(2);
    let poly = random_generator_poly(rng, &gens, 3, 2)?;
    Ok(SymPoly { extended, poly })
}

/// Generator lists for the invariant algebras used by the surjectivity
/// witness: full families for A/B/C; for D the even subalgebra generators
/// (Pfaffian squared plus the higher coefficients), which is the extended
/// invariant ring.
fn witness_generators(ty: ClassicalType, rank: usize) -> Result<Vec<SparsePoly>> {
    let fam = crate::invariants::char_poly_family(ty, rank, true)?;
    match ty {
        ClassicalType::D => {
            let mut gens = Vec::new();
            let pf = &fam.generators[0];
            gens.push(pf.mul(pf)?);
            gens.extend(fam.generators[1..].iter().cloned());
            Ok(gens)
        }
        _ => Ok(fam.generators),
    }
}

/// The index-shifted preimages of the small generators under restriction.
fn witness_preimages(ty: ClassicalType, n: usize, k: usize) -> Result<Vec<SparsePoly>> {
    let fam_k = crate::invariants::char_poly_family(ty, k, true)?;
    let shift = k - n;
    match ty {
        ClassicalType::A => {
            // Small generator nu (1..n+1) lifts to large generator nu + shift.
            Ok((1..=n + 1)
                .map(|nu| fam_k.generators[nu + shift - 1].clone())
                .collect())
        }
        ClassicalType::B | ClassicalType::C => Ok((1..=n)
            .map(|nu| fam_k.generators[nu + shift - 1].clone())
            .collect()),
        ClassicalType::D => {
            // Small even generators: pf^2 lifts to (-1)^n p_{k, k-n+1} (the
            // restriction of the constant coefficient carries the sign of
            // (-1)^n with the real Pfaffian convention), and p_{n,nu} lifts
            // to p_{k, nu+shift}.
            let mut gens = Vec::new();
            if shift == 0 {
                let pf = &fam_k.generators[0];
                gens.push(pf.mul(pf)?);
            } else if n % 2 == 0 {
                gens.push(fam_k.generators[shift].clone());
            } else {
                gens.push(fam_k.generators[shift].neg());
            }
            gens.extend((2..=n).map(|nu| fam_k.generators[nu + shift - 1].clone()));
            Ok(gens)
        }
    }
}

#[derive(Debug, Clone)]
pub struct SurjectivityWitnessReport {
    pub trials: usize,
    pub failures: usize,
    /// Labelled "witnessed": constructive preimages for a generating family,
    /// not an abstract proof.
    pub pass: bool,
}

/// Constructive section of the restriction operator: random invariants built
/// from the small generator family lift along the index-shifted generator
/// correspondence, exactly, both at the invariant level and through the
/// shifted alternating spaces.
pub fn surjectivity_witness(
    pair: &PropagationPair,
    trials: usize,
    seed: u64,
) -> Result<SurjectivityWitnessReport> {
    let ty = pair.ty;
    let n = pair.small.rank;
    let k = pair.large.rank;
    let small_gens = witness_generators(ty, n)?;
    let large_gens = witness_preimages(ty, n, k)?;
    let extended = ty == ClassicalType::D;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    for _ in 0..trials {
        // Same random expression in the small generators and their preimages.
        let state = rng.clone();
        let f_small = random_generator_poly(&mut rng, &small_gens, 3, 2)?;
        let mut rng2 = state;
        let f_large = random_generator_poly(&mut rng2, &large_gens, 3, 2)?;
        let restricted = crate::invariants::restrict_to_padded(&f_large, pair.small.ambient_dim)?;
        if restricted != f_small {
            failures += 1;
            continue;
        }
        if f_small.is_zero() {
            continue;
        }
        // Through the shifted spaces: P(T_k^{-1} F_k) = T_n^{-1} F_n exactly.
        let phi_k = t_inv(
            &pair.large,
            &SymPoly {
                extended,
                poly: f_large,
            },
        )?;
        let phi_n = t_inv(
            &pair.small,
            &SymPoly {
                extended,
                poly: f_small,
            },
        )?;
        let transported = p_restrict_alt(pair, &phi_k)?;
        if transported.poly != phi_n.poly {
            failures += 1;
        }
    }
    Ok(SurjectivityWitnessReport {
        trials,
        failures,
        pass: failures == 0,
    })
}

/// Random seed polynomial for alternating constructions.
pub fn random_seed_poly(rng: &mut ChaCha8Rng, nvars: usize, max_degree: i64) -> SparsePoly {
    let mut terms = Vec::new();
    for _ in 0..4 {
        let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(0..=max_degree)).collect();
        let c = rat(rng.gen_range(-3i64..=3));
        terms.push((e, c));
    }
    SparsePoly::from_terms(nvars, false, terms).expect("random poly")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::make_pair;
    use crate::rootsys::{build, build_permissive, varpi};

    #[test]
    fn alt_symmetrize_a1() {
        let ctx = build(ClassicalType::A, 1).unwrap();
        // seed = lambda_2^2
        let seed = SparsePoly::var(2, 1).pow(2).unwrap();
        let phi = alt_symmetrize(&ctx, false, &seed).unwrap();
        assert!(!phi.poly.is_zero());
        assert!(is_rho_alternating(&ctx, false, &phi.poly).unwrap());
    }

    #[test]
    fn varpi_shift_is_alternating() {
        // Phi(lambda) = varpi(lambda + rho) satisfies the shifted law, and
        // alt-symmetrizing it multiplies by the group order.
        let ctx = build(ClassicalType::B, 2).unwrap();
        let w_shift = rho_shift_forward(&ctx, &varpi(&ctx)).unwrap();
        assert!(is_rho_alternating(&ctx, false, &w_shift).unwrap());
        let sym = alt_symmetrize(&ctx, false, &w_shift).unwrap();
        assert_eq!(sym.poly, w_shift.scale(&rat(8)));
    }

    #[test]
    fn specific_monomial_seed_b2() {
        // seed = lambda_1^4 lambda_2^2 survives the alternation and lands in
        // the shifted alternating space.
        let ctx = build(ClassicalType::B, 2).unwrap();
        let seed = SparsePoly::monomial(2, vec![4, 2], rat(1));
        let phi = alt_symmetrize(&ctx, false, &seed).unwrap();
        assert!(is_rho_alternating(&ctx, false, &phi.poly).unwrap());
        assert!(vanishing_check(&ctx, &phi).unwrap().divisible);
    }

    #[test]
    fn vanishing_and_t_roundtrip() {
        let ctx = build(ClassicalType::B, 2).unwrap();
        let w = varpi(&ctx);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut produced = 0;
        for _ in 0..20 {
            let seed = random_seed_poly(&mut rng, 2, 4);
            let phi = match alt_symmetrize(&ctx, false, &seed) {
                Ok(p) => p,
                Err(Error::DegenerateSeed) => continue,
                Err(e) => panic!("{e}"),
            };
            produced += 1;
            let v = vanishing_check(&ctx, &phi).unwrap();
            assert!(v.divisible);
            // Independent oracle for the division: multiply back.
            let shifted = rho_shift_back(&ctx, &phi.poly).unwrap();
            assert_eq!(v.quotient.mul(&w).unwrap(), shifted);
            let f = t_op(&ctx, &phi).unwrap();
            let back = t_inv(&ctx, &f).unwrap();
            assert_eq!(back.poly, phi.poly);
            let forward = t_op(&ctx, &back).unwrap();
            assert_eq!(forward.poly, f.poly);
        }
        assert!(produced >= 3);
    }

    #[test]
    fn t_on_varpi_shift_is_constant() {
        // Phi(lambda) = varpi(lambda + rho) has Phi(lambda - rho) = varpi(lambda),
        // so T(Phi) is the constant varpi(rho).
        let ctx = build(ClassicalType::B, 2).unwrap();
        let phi = RhoAltPoly {
            extended: false,
            poly: rho_shift_forward(&ctx, &varpi(&ctx)).unwrap(),
        };
        let f = t_op(&ctx, &phi).unwrap();
        let c = varpi_at(&ctx, &ctx.rho);
        assert_eq!(f.poly, SparsePoly::constant(2, c));
    }

    #[test]
    fn rank_one_unwind() {
        // A_1: Phi(lambda - rho) = <lambda, alpha> q(lambda) gives T(Phi) = varpi(rho) q.
        let ctx = build(ClassicalType::A, 1).unwrap();
        let w = varpi(&ctx);
        let q = SparsePoly::var(2, 0)
            .add(&SparsePoly::var(2, 1))
            .unwrap()
            .pow(2)
            .unwrap();
        // Build Phi with Phi(lambda - rho) = w * q, i.e. Phi = (w q)(lambda + rho).
        let phi_poly = rho_shift_forward(&ctx, &w.mul(&q).unwrap()).unwrap();
        // q is symmetric, w alternating: the law holds.
        let phi = RhoAltPoly {
            extended: false,
            poly: phi_poly,
        };
        let f = t_op(&ctx, &phi).unwrap();
        assert_eq!(f.poly, q.scale(&varpi_at(&ctx, &ctx.rho)));
    }

    #[test]
    fn p_restrict_identity_and_chain() {
        let pair = make_pair(ClassicalType::A, 2, 2).unwrap();
        let ctx = &pair.large;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let seed = random_seed_poly(&mut rng, ctx.ambient_dim, 3);
        if let Ok(phi) = alt_symmetrize(ctx, false, &seed) {
            let back = p_restrict_alt(&pair, &phi).unwrap();
            assert_eq!(back.poly, phi.poly);
        }

        // Chain consistency P_{k,n} = P_{m,n} o P_{k,m} for A: 1 < 2 < 3.
        let pair_kn = make_pair(ClassicalType::A, 1, 3).unwrap();
        let pair_km = make_pair(ClassicalType::A, 2, 3).unwrap();
        let pair_mn = make_pair(ClassicalType::A, 1, 2).unwrap();
        let ctx_k = &pair_kn.large;
        let mut done = 0;
        let mut tries = 0;
        while done < 3 && tries < 20 {
            tries += 1;
            let seed = random_seed_poly(&mut rng, ctx_k.ambient_dim, 3);
            let phi = match alt_symmetrize(ctx_k, false, &seed) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let direct = p_restrict_alt(&pair_kn, &phi).unwrap();
            let mid = p_restrict_alt(&pair_km, &phi).unwrap();
            let composed = p_restrict_alt(&pair_mn, &mid).unwrap();
            assert_eq!(direct.poly, composed.poly);
            done += 1;
        }
        assert!(done > 0);
    }

    #[test]
    fn c_coeff_routes_agree() {
        let pair = make_pair(ClassicalType::B, 2, 3).unwrap();
        // Quadratic invariant upstairs.
        let fam = crate::invariants::char_poly_family(ClassicalType::B, 3, false).unwrap();
        let f = SymPoly {
            extended: false,
            poly: fam.generators[2].clone(), // -(x1^2+x2^2+x3^2)
        };
        let routes = c_coeff(&pair, &f, 3).unwrap();
        assert!(routes.agree);

        // Constant 1 on the identity pair: all coefficients 1.
        let pair = make_pair(ClassicalType::B, 2, 2).unwrap();
        let f = SymPoly {
            extended: false,
            poly: SparsePoly::one(2),
        };
        let routes = c_coeff(&pair, &f, 2).unwrap();
        assert!(routes.agree);
        assert!(routes.via_restriction.0.values().all(|v| v == &rat(1)));

        // Zero polynomial: zero sequence.
        let f = SymPoly {
            extended: false,
            poly: SparsePoly::zero(2),
        };
        let routes = c_coeff(&pair, &f, 2).unwrap();
        assert!(routes.agree);
        assert!(routes.via_restriction.0.values().all(|v| v.is_zero()));
    }

    #[test]
    fn dim_identity_small() {
        let ctx = build(ClassicalType::A, 1).unwrap();
        let omega = CoordVector(vec![crate::ratio::frac(-1, 2), crate::ratio::frac(1, 2)]);
        let weights: Vec<CoordVector> = (0..=10).map(|m| omega.scale(&rat(m))).collect();
        let r = q_dim_identity(&ctx, &weights).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn surjectivity_witness_all_types() {
        for (ty, n, k) in [
            (ClassicalType::A, 1, 2),
            (ClassicalType::B, 2, 3),
            (ClassicalType::C, 2, 3),
            (ClassicalType::D, 3, 4),
        ] {
            let pair = make_pair(ty, n, k).unwrap();
            let r = surjectivity_witness(&pair, 3, 17).unwrap();
            assert!(r.pass, "{ty:?} {n} {k}: {r:?}");
        }
    }

    #[test]
    fn degenerate_seed_flagged() {
        let ctx = build_permissive(ClassicalType::B, 1).unwrap();
        // Constant seeds alternate to zero (sum of dets over {1, s} is 0).
        let seed = SparsePoly::one(1);
        assert!(matches!(
            alt_symmetrize(&ctx, false, &seed),
            Err(Error::DegenerateSeed)
        ));
    }
}
