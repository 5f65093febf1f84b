//! Invariant polynomial generator families from characteristic polynomials,
//! their restriction to left-padded subspaces, and the surjectivity/failure
//! dichotomy under propagation.
//!
//! Generators are indexed as in the defining expansions: `p_{k,nu}` is the
//! coefficient of `t^{nu-1}` (A), `t^{2 nu - 1}` (B), `t^{2(nu-1)}` (C, and D
//! for `nu >= 2`); for type D `p_{k,1}` is the Pfaffian, stored with the sign
//! convention `x_1 ... x_k` and squaring to the determinant coefficient.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{SparsePoly, SubstValue};
use crate::ratio::{rat, Rational};
use crate::rootsys::{build_with, ClassicalType, RootSystemCtx};
use crate::weylgrp::{reflection, WeylGroup};

#[derive(Debug, Clone)]
pub struct InvariantFamily {
    pub ctx: RootSystemCtx,
    /// `generators[nu - 1] = p_{k,nu}` in the ambient variables.
    pub generators: Vec<SparsePoly>,
    /// Type D: index (1-based) of the Pfaffian generator.
    pub pfaffian_index: Option<usize>,
}

/// The full characteristic polynomial `F(t, X)` as a polynomial in `1 + N`
/// variables, variable 0 playing the role of `t`.
pub fn char_poly(ty: ClassicalType, rank: usize, permissive: bool) -> Result<SparsePoly> {
    let n = ClassicalType::ambient_dim(ty, rank);
    let nv = n + 1;
    let t = SparsePoly::var(nv, 0);
    let x = |i: usize| SparsePoly::var(nv, i + 1);
    let mut acc = SparsePoly::one(nv);
    match ty {
        ClassicalType::A => {
            for j in 0..n {
                acc = acc.mul(&t.add(&x(j))?)?;
            }
        }
        ClassicalType::B => {
            acc = t.clone();
            for j in 0..n {
                let factor = t.pow(2)?.sub(&x(j).pow(2)?)?;
                acc = acc.mul(&factor)?;
            }
        }
        ClassicalType::C | ClassicalType::D => {
            for j in 0..n {
                let factor = t.pow(2)?.sub(&x(j).pow(2)?)?;
                acc = acc.mul(&factor)?;
            }
        }
    }
    let _ = build_with(ty, rank, permissive)?; // validate rank range
    Ok(acc)
}

/// Extract the coefficient of `t^d` from an `F(t, X)` polynomial, as a
/// polynomial in the `X` variables alone.
fn t_coefficient(f: &SparsePoly, d: i64) -> SparsePoly {
    let n = f.nvars() - 1;
    let terms: Vec<(Vec<i64>, Rational)> = f
        .terms()
        .filter(|(e, _)| e[0] == d)
        .map(|(e, c)| (e[1..].to_vec(), c.clone()))
        .collect();
    SparsePoly::from_terms(n, false, terms).expect("coefficient extraction")
}

/// Build the generator family for the given type and rank, verifying
/// invariance under every simple reflection at construction.
pub fn char_poly_family(
    ty: ClassicalType,
    rank: usize,
    permissive: bool,
) -> Result<InvariantFamily> {
    let ctx = build_with(ty, rank, permissive)?;
    let n = ctx.ambient_dim;
    let f = char_poly(ty, rank, permissive)?;
    let mut generators = Vec::new();
    let mut pfaffian_index = None;
    match ty {
        ClassicalType::A => {
            for nu in 1..=(n as i64) {
                generators.push(t_coefficient(&f, nu - 1));
            }
            // nu = k+1 coefficient is e_1; the leading t^{k+1} has coefficient 1.
        }
        ClassicalType::B => {
            for nu in 1..=(rank as i64) {
                generators.push(t_coefficient(&f, 2 * nu - 1));
            }
        }
        ClassicalType::C => {
            for nu in 1..=(rank as i64) {
                generators.push(t_coefficient(&f, 2 * (nu - 1)));
            }
        }
        ClassicalType::D => {
            // p_1 = x_1 ... x_k with sign normalized to +1; its square must be
            // the constant t-coefficient up to the sign (-1)^k.
            let mut e = vec![0i64; n];
            e.iter_mut().for_each(|x| *x = 1);
            let pf = SparsePoly::monomial(n, e, Rational::one());
            let constant = t_coefficient(&f, 0);
            let signed = if rank % 2 == 0 {
                constant.clone()
            } else {
                constant.neg()
            };
            if pf.mul(&pf)? != signed {
                return Err(Error::internal("Pfaffian square mismatch"));
            }
            generators.push(pf);
            pfaffian_index = Some(1);
            for nu in 2..=(rank as i64) {
                generators.push(t_coefficient(&f, 2 * (nu - 1)));
            }
        }
    }

    // Construction check: fixed by every simple reflection.
    for alpha in &ctx.simple_roots {
        let s = reflection(&ctx, alpha)?;
        for g in &generators {
            if &g.act_signed_perm(&s)? != g {
                return Err(Error::internal("generator not Weyl invariant"));
            }
        }
    }

    Ok(InvariantFamily {
        ctx,
        generators,
        pfaffian_index,
    })
}

impl InvariantFamily {
    /// Expected generator degree for this indexing.
    pub fn expected_degree(&self, nu: usize) -> usize {
        let k = self.ctx.rank;
        match self.ctx.classical_type {
            ClassicalType::A => k + 2 - nu,
            ClassicalType::B | ClassicalType::C => 2 * (k + 1 - nu),
            ClassicalType::D => {
                if nu == 1 {
                    k
                } else {
                    2 * (k + 1 - nu)
                }
            }
        }
    }
}

/// Substitute zero for the padded coordinates (indices above the small
/// ambient dimension) and reindex into the small variable set.
pub fn restrict_to_padded(p: &SparsePoly, small_ambient: usize) -> Result<SparsePoly> {
    let n = p.nvars();
    if small_ambient > n {
        return Err(Error::DimensionMismatch(small_ambient, n));
    }
    let assignment: BTreeMap<usize, SubstValue> = (small_ambient..n)
        .map(|i| (i, SubstValue::Const(Rational::zero())))
        .collect();
    let q = p.substitute(&assignment)?;
    let terms: Vec<(Vec<i64>, Rational)> = q
        .terms()
        .map(|(e, c)| (e[..small_ambient].to_vec(), c.clone()))
        .collect();
    SparsePoly::from_terms(small_ambient, p.is_laurent(), terms)
}

/// Restrict every generator of the rank-`k` family to the left-padded rank-`n`
/// subspace, returned in the small variables (same indexing as the input).
pub fn restrict_family(fam: &InvariantFamily, n: usize) -> Result<Vec<SparsePoly>> {
    let small_ambient = fam.ctx.classical_type.ambient_dim(n);
    fam.generators
        .iter()
        .map(|g| restrict_to_padded(g, small_ambient))
        .collect()
}

#[derive(Debug, Clone)]
pub struct SurjectivityReport {
    pub ty: ClassicalType,
    pub small_rank: usize,
    pub large_rank: usize,
    /// A/B/C (and the D even part): every small generator is hit verbatim.
    pub generators_hit: bool,
    /// Leading restrictions vanish as the expansion predicts.
    pub vanishing_ok: bool,
    /// Type D only.
    pub image_even: Option<bool>,
    pub pfaffian_odd: Option<bool>,
    pub pfaffian_square_hit: Option<bool>,
    pub pass: bool,
}

/// Check the restriction identities and the surjectivity dichotomy for a
/// propagation of invariant families.
pub fn check_surjectivity(ty: ClassicalType, n: usize, k: usize) -> Result<SurjectivityReport> {
    if n > k {
        return Err(Error::BadParams("need n <= k".into()));
    }
    let fam_k = char_poly_family(ty, k, true)?;
    let fam_n = char_poly_family(ty, n, true)?;
    let restricted = restrict_family(&fam_k, n)?;

    let mut vanishing_ok = true;
    let mut generators_hit = true;
    let mut image_even = None;
    let mut pfaffian_odd = None;
    let mut pfaffian_square_hit = None;

    match ty {
        ClassicalType::A | ClassicalType::B | ClassicalType::C => {
            let count = fam_k.generators.len();
            for nu in 1..=count {
                let r = &restricted[nu - 1];
                if nu + n < k + 1 {
                    // nu <= k - n: restriction vanishes.
                    if !r.is_zero() {
                        vanishing_ok = false;
                    }
                } else {
                    let small_nu = nu + n - k;
                    if r != &fam_n.generators[small_nu - 1] {
                        generators_hit = false;
                    }
                }
            }
        }
        ClassicalType::D => {
            let small_ambient = n;
            // (i) every restricted generator is fixed by each single sign change.
            let mut even = true;
            for r in &restricted {
                for i in 0..small_ambient {
                    let s = crate::weylgrp::SignedPerm::sign_change(small_ambient, i);
                    if &r.act_signed_perm(&s)? != r {
                        even = false;
                    }
                }
            }
            image_even = Some(even);
            // (ii) the small Pfaffian is negated by eps_1 = -1 (when k > n this
            // certifies it is outside the even image).
            let pf = &fam_n.generators[0];
            let s1 = crate::weylgrp::SignedPerm::sign_change(small_ambient, 0);
            pfaffian_odd = Some(pf.act_signed_perm(&s1)? == pf.neg());
            // (iii) the even generators are all hit per the expansion. With
            // the real sign convention for the stored Pfaffian, the constant
            // coefficient restricts to (-1)^n (x_1...x_n)^2.
            let mut hit = true;
            for nu in 1..=k {
                let r = &restricted[nu - 1];
                if nu <= k - n {
                    if !r.is_zero() {
                        vanishing_ok = false;
                    }
                } else if nu == k - n + 1 {
                    if k > n {
                        let pf_sq = {
                            let sq = pf.mul(pf)?;
                            if n % 2 == 0 {
                                sq
                            } else {
                                sq.neg()
                            }
                        };
                        if r != &pf_sq {
                            hit = false;
                        }
                        pfaffian_square_hit = Some(r == &pf_sq);
                    } else {
                        // identity restriction: nu = 1 is the Pfaffian itself
                        if r != &fam_n.generators[0] {
                            hit = false;
                        }
                    }
                } else {
                    let small_nu = nu + n - k;
                    if r != &fam_n.generators[small_nu - 1] {
                        hit = false;
                    }
                }
            }
            generators_hit = hit;
        }
    }

    let pass = match ty {
        ClassicalType::A | ClassicalType::B | ClassicalType::C => generators_hit && vanishing_ok,
        ClassicalType::D => {
            generators_hit
                && vanishing_ok
                && image_even == Some(true)
                && pfaffian_odd == Some(true)
                && (n == k || pfaffian_square_hit == Some(true))
        }
    };

    Ok(SurjectivityReport {
        ty,
        small_rank: n,
        large_rank: k,
        generators_hit,
        vanishing_ok,
        image_even,
        pfaffian_odd,
        pfaffian_square_hit,
        pass,
    })
}

/// Group average `|W|^{-1} sum_w (w . p)`; a projection onto the invariants.
pub fn reynolds(group: &WeylGroup, p: &SparsePoly) -> Result<SparsePoly> {
    let elements = group.enumerate()?;
    let mut acc = SparsePoly::zero(p.nvars());
    if p.is_laurent() {
        acc = acc.into_laurent();
    }
    for w in elements {
        acc = acc.add(&p.act_signed_perm(w)?)?;
    }
    let order = rat(elements.len() as i64);
    Ok(acc.scale(&order.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::frac;

    fn elementary_symmetric(n: usize, d: usize) -> SparsePoly {
        // Independent oracle by direct subset enumeration.
        let mut terms = Vec::new();
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let mut e = vec![0i64; n];
            for &i in &idx {
                e[i] = 1;
            }
            terms.push((e, rat(1)));
            // next combination
            let mut i = d;
            loop {
                if i == 0 {
                    return SparsePoly::from_terms(n, false, terms).unwrap();
                }
                i -= 1;
                if idx[i] != i + n - d {
                    idx[i] += 1;
                    for j in i + 1..d {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn a2_generators_are_elementary_symmetric() {
        let fam = char_poly_family(ClassicalType::A, 2, false).unwrap();
        // p_{2,3} = e_1, p_{2,2} = e_2, p_{2,1} = e_3.
        assert_eq!(fam.generators[2], elementary_symmetric(3, 1));
        assert_eq!(fam.generators[1], elementary_symmetric(3, 2));
        assert_eq!(fam.generators[0], elementary_symmetric(3, 3));
    }

    #[test]
    fn b2_generators_explicit() {
        let fam = char_poly_family(ClassicalType::B, 2, false).unwrap();
        // t(t^2-x_1^2)(t^2-x_2^2) = t^5 - (x_1^2+x_2^2) t^3 + x_1^2 x_2^2 t.
        let x1 = SparsePoly::var(2, 0);
        let x2 = SparsePoly::var(2, 1);
        let p22 = x1.pow(2).unwrap().add(&x2.pow(2).unwrap()).unwrap().neg();
        let p21 = x1.pow(2).unwrap().mul(&x2.pow(2).unwrap()).unwrap();
        assert_eq!(fam.generators[1], p22);
        assert_eq!(fam.generators[0], p21);
    }

    #[test]
    fn d4_pfaffian() {
        let fam = char_poly_family(ClassicalType::D, 4, false).unwrap();
        assert_eq!(fam.pfaffian_index, Some(1));
        let pf = &fam.generators[0];
        assert_eq!(pf.total_degree(), Some(4));
        assert_eq!(pf.num_terms(), 1);
        // p_1^2 equals the constant coefficient of prod(t^2 - x_j^2).
        let f = char_poly(ClassicalType::D, 4, false).unwrap();
        let c0 = t_coefficient(&f, 0);
        assert_eq!(pf.mul(pf).unwrap(), c0);
    }

    #[test]
    fn generator_degrees() {
        for (ty, rank) in [
            (ClassicalType::A, 3),
            (ClassicalType::B, 3),
            (ClassicalType::C, 3),
            (ClassicalType::D, 4),
        ] {
            let fam = char_poly_family(ty, rank, false).unwrap();
            for (i, g) in fam.generators.iter().enumerate() {
                assert_eq!(
                    g.total_degree(),
                    Some(fam.expected_degree(i + 1) as i64),
                    "{ty:?} nu={}",
                    i + 1
                );
            }
        }
    }

    #[test]
    fn char_poly_padding_identity_type_a() {
        // F_2(t, X) for type A with x_3 -> 0 equals t * F_1(t, x).
        let f2 = char_poly(ClassicalType::A, 2, false).unwrap();
        let set = BTreeMap::from([(3usize, SubstValue::Const(Rational::zero()))]);
        let lhs = f2.substitute(&set).unwrap();
        // Reindex: drop variable x_3.
        let lhs = SparsePoly::from_terms(
            3,
            false,
            lhs.terms().map(|(e, c)| (e[..3].to_vec(), c.clone())),
        )
        .unwrap();
        let f1 = char_poly(ClassicalType::A, 1, false).unwrap();
        let rhs = SparsePoly::var(3, 0).mul(&f1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_identities_spot() {
        // A, k=2 -> n=1: p_{2,1}| = 0, p_{2,2}| = p_{1,1}, p_{2,3}| = p_{1,2}.
        let fam2 = char_poly_family(ClassicalType::A, 2, false).unwrap();
        let fam1 = char_poly_family(ClassicalType::A, 1, false).unwrap();
        let r = restrict_family(&fam2, 1).unwrap();
        assert!(r[0].is_zero());
        assert_eq!(r[1], fam1.generators[0]);
        assert_eq!(r[2], fam1.generators[1]);

        // B, k=3 -> n=2.
        let fam3 = char_poly_family(ClassicalType::B, 3, false).unwrap();
        let fam2 = char_poly_family(ClassicalType::B, 2, false).unwrap();
        let r = restrict_family(&fam3, 2).unwrap();
        assert!(r[0].is_zero());
        assert_eq!(r[1], fam2.generators[0]);
        assert_eq!(r[2], fam2.generators[1]);

        // D, k=5 -> n=4: p_{5,1}| = 0, p_{5,2}| = p_{4,1}^2, p_{5,nu}| = p_{4,nu-1}.
        let fam5 = char_poly_family(ClassicalType::D, 5, false).unwrap();
        let fam4 = char_poly_family(ClassicalType::D, 4, false).unwrap();
        let r = restrict_family(&fam5, 4).unwrap();
        assert!(r[0].is_zero());
        let pf_sq = fam4.generators[0].mul(&fam4.generators[0]).unwrap();
        assert_eq!(r[1], pf_sq);
        for nu in 3..=5 {
            assert_eq!(r[nu - 1], fam4.generators[nu - 2]);
        }
    }

    #[test]
    fn surjectivity_reports() {
        assert!(check_surjectivity(ClassicalType::C, 2, 4).unwrap().pass);
        assert!(check_surjectivity(ClassicalType::B, 3, 3).unwrap().pass);
        let d = check_surjectivity(ClassicalType::D, 4, 6).unwrap();
        assert!(d.pass);
        assert_eq!(d.image_even, Some(true));
        assert_eq!(d.pfaffian_odd, Some(true));
        assert_eq!(d.pfaffian_square_hit, Some(true));
    }

    #[test]
    fn generators_fixed_by_full_group() {
        // Cross-check against the whole enumerated group, not just the
        // generators, for every type at rank <= 4.
        for (ty, rank) in [
            (ClassicalType::A, 3),
            (ClassicalType::B, 4),
            (ClassicalType::C, 4),
            (ClassicalType::D, 4),
        ] {
            let fam = char_poly_family(ty, rank, true).unwrap();
            let group = WeylGroup::new(fam.ctx.clone(), false).unwrap();
            for w in group.enumerate().unwrap() {
                for g in &fam.generators {
                    assert_eq!(&g.act_signed_perm(w).unwrap(), g, "{ty:?}_{rank}");
                }
            }
        }
    }

    #[test]
    fn reynolds_projection() {
        let ctx = crate::rootsys::build(ClassicalType::B, 2).unwrap();
        let w = WeylGroup::new(ctx, false).unwrap();
        let x1sq = SparsePoly::var(2, 0).pow(2).unwrap();
        let avg = reynolds(&w, &x1sq).unwrap();
        let expect = SparsePoly::var(2, 0)
            .pow(2)
            .unwrap()
            .add(&SparsePoly::var(2, 1).pow(2).unwrap())
            .unwrap()
            .scale(&frac(1, 2));
        assert_eq!(avg, expect);
        // Idempotence and invariance.
        assert_eq!(reynolds(&w, &avg).unwrap(), avg);

        let ctx = crate::rootsys::build(ClassicalType::A, 2).unwrap();
        let w = WeylGroup::new(ctx, false).unwrap();
        let avg = reynolds(&w, &SparsePoly::var(3, 0)).unwrap();
        let e1 = SparsePoly::var(3, 0)
            .add(&SparsePoly::var(3, 1))
            .unwrap()
            .add(&SparsePoly::var(3, 2))
            .unwrap();
        assert_eq!(avg, e1.scale(&frac(1, 3)));
    }
}
