//! Signed permutations, Weyl group enumeration, and restriction of subspace
//! stabilizers.
//!
//! An element acts by `(w . x)_i = eps_i * x_{sigma^{-1}(i)}`. Type-A elements
//! carry all-plus signs, plain type-D elements an even number of minus signs;
//! the extended group of type D admits odd sign changes as well.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num::{One, Zero};

use crate::coord::CoordVector;
use crate::error::{Error, Result};
use crate::ratio::Rational;
use crate::rootsys::{ClassicalType, RootSystemCtx};

/// Default cap on the number of elements an enumeration may produce.
pub const ENUMERATION_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm {
    /// Forward permutation: `perm[i] = sigma(i)` (0-based).
    perm: Vec<usize>,
    /// Signs indexed by ambient coordinate: `signs[i] = eps_i`.
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(dim: usize) -> Self {
        SignedPerm {
            perm: (0..dim).collect(),
            signs: vec![1; dim],
        }
    }

    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::DimensionMismatch(signs.len(), n));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::BadParams("not a permutation".into()));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::BadParams("signs must be +-1".into()));
        }
        Ok(SignedPerm { perm, signs })
    }

    /// Transposition of coordinates `i`, `j` (the reflection in `f_{j+1} - f_{i+1}`).
    pub fn transposition(dim: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(dim);
        w.perm.swap(i, j);
        w
    }

    /// Single sign change on coordinate `i` (the reflection in `f_{i+1}` or `2 f_{i+1}`).
    pub fn sign_change(dim: usize, i: usize) -> Self {
        let mut w = Self::identity(dim);
        w.signs[i] = -1;
        w
    }

    /// Swap with both signs flipped (the reflection in `f_{i+1} + f_{j+1}`).
    pub fn neg_transposition(dim: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(dim);
        w.perm.swap(i, j);
        w.signs[i] = -1;
        w.signs[j] = -1;
        w
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// `sigma(i)`.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// `eps_i` for ambient coordinate `i`.
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    /// Composition acting as maps: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let mut perm = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            // other sends coordinate j to slot other.perm[j]; self forwards it.
            let mid = other.perm[j];
            let dst = self.perm[mid];
            perm[j] = dst;
            signs[dst] = self.signs[dst] * other.signs[mid];
        }
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.dim();
        let mut perm = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let dst = self.perm[j];
            perm[dst] = j;
            signs[j] = self.signs[dst];
        }
        SignedPerm { perm, signs }
    }

    /// Apply to a coordinate vector: `y_{sigma(j)} = eps_{sigma(j)} x_j`.
    pub fn apply(&self, x: &CoordVector) -> CoordVector {
        let n = self.dim();
        assert_eq!(n, x.dim());
        let mut y = vec![Rational::zero(); n];
        for j in 0..n {
            let dst = self.perm[j];
            let v = x.0[j].clone();
            y[dst] = if self.signs[dst] < 0 { -v } else { v };
        }
        CoordVector(y)
    }

    /// Apply to an integer exponent vector (same action).
    pub fn apply_i64(&self, x: &[i64]) -> Vec<i64> {
        let n = self.dim();
        assert_eq!(n, x.len());
        let mut y = vec![0i64; n];
        for j in 0..n {
            let dst = self.perm[j];
            y[dst] = if self.signs[dst] < 0 { -x[j] } else { x[j] };
        }
        y
    }

    pub fn perm_sign(&self) -> i8 {
        // Count inversions by cycle decomposition.
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut sign = 1i8;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0usize;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Determinant of the matrix form: `sign(sigma) * prod(eps)`.
    pub fn det(&self) -> i8 {
        let mut d = self.perm_sign();
        for &s in &self.signs {
            d *= s;
        }
        d
    }

    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i) && self.signs.iter().all(|&s| s == 1)
    }

    /// Matrix form (columns are images of basis vectors).
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for j in 0..n {
            let dst = self.perm[j];
            m[dst][j] = if self.signs[dst] < 0 {
                -Rational::one()
            } else {
                Rational::one()
            };
        }
        m
    }
}

/// A Weyl group `W` (or its odd-sign-change extension for type D) with lazy
/// exhaustive enumeration.
#[derive(Debug)]
pub struct WeylGroup {
    pub ctx: RootSystemCtx,
    pub extended: bool,
    generators: Vec<SignedPerm>,
    elements: OnceLock<BTreeSet<SignedPerm>>,
}

impl WeylGroup {
    pub fn new(ctx: RootSystemCtx, extended: bool) -> Result<Self> {
        let mut generators = Vec::new();
        for alpha in &ctx.simple_roots {
            generators.push(reflection(&ctx, alpha)?);
        }
        if extended && ctx.classical_type == ClassicalType::D {
            generators.push(SignedPerm::sign_change(ctx.ambient_dim, 0));
        }
        Ok(WeylGroup {
            ctx,
            extended,
            generators,
            elements: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.generators
    }

    /// Group order predicted by the classical formulas.
    pub fn predicted_order(&self) -> u128 {
        predicted_order(self.ctx.classical_type, self.ctx.rank, self.extended)
    }

    /// Breadth-first closure over the generators. Refuses when the predicted
    /// order exceeds the cap.
    pub fn enumerate(&self) -> Result<&BTreeSet<SignedPerm>> {
        if let Some(set) = self.elements.get() {
            return Ok(set);
        }
        let predicted = self.predicted_order();
        if predicted > ENUMERATION_CAP {
            return Err(Error::EnumerationCap {
                predicted,
                cap: ENUMERATION_CAP,
            });
        }
        let mut set = BTreeSet::new();
        let id = SignedPerm::identity(self.ctx.ambient_dim);
        set.insert(id.clone());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &self.generators {
                    let wg = g.compose(w);
                    if set.insert(wg.clone()) {
                        next.push(wg);
                    }
                }
            }
            frontier = next;
        }
        if set.len() as u128 != predicted {
            return Err(Error::internal(format!(
                "enumeration produced {} elements, formula predicts {}",
                set.len(),
                predicted
            )));
        }
        let _ = self.elements.set(set);
        Ok(self.elements.get().unwrap())
    }

    pub fn order(&self) -> Result<u128> {
        Ok(self.enumerate()?.len() as u128)
    }
}

pub fn predicted_order(ty: ClassicalType, rank: usize, extended: bool) -> u128 {
    let fact = |n: usize| -> u128 { (1..=n as u128).product::<u128>().max(1) };
    match ty {
        ClassicalType::A => fact(rank + 1),
        ClassicalType::B | ClassicalType::C => (1u128 << rank) * fact(rank),
        ClassicalType::D => {
            if extended {
                (1u128 << rank) * fact(rank)
            } else {
                (1u128 << (rank - 1)) * fact(rank)
            }
        }
    }
}

/// The reflection `s_alpha : v -> v - 2<alpha,v>/<alpha,alpha> alpha`,
/// expressed as a signed permutation. `alpha` must be a root of `ctx`.
pub fn reflection(ctx: &RootSystemCtx, alpha: &CoordVector) -> Result<SignedPerm> {
    if !ctx.roots.contains(alpha) {
        return Err(Error::NotARoot);
    }
    let n = ctx.ambient_dim;
    let norm = alpha.norm_sq();
    let mut perm = vec![usize::MAX; n];
    let mut signs = vec![0i8; n];
    for j in 0..n {
        let e = CoordVector::basis(n, j);
        let c = alpha.scale(&(crate::ratio::rat(2) * e.dot(alpha) / norm.clone()));
        let image = e.sub(&c);
        // The image must be +- a basis vector.
        let mut found = None;
        for (i, coord) in image.0.iter().enumerate() {
            if !coord.is_zero() {
                if found.is_some() {
                    return Err(Error::NotSignedPerm);
                }
                if coord == &Rational::one() {
                    found = Some((i, 1i8));
                } else if coord == &(-Rational::one()) {
                    found = Some((i, -1i8));
                } else {
                    return Err(Error::NotSignedPerm);
                }
            }
        }
        let (dst, s) = found.ok_or(Error::NotSignedPerm)?;
        perm[j] = dst;
        signs[dst] = s;
    }
    SignedPerm::new(perm, signs)
}

/// Result of restricting a stabilizer `W_E(F)` to the subspace `E`.
#[derive(Debug, Clone)]
pub struct StabilizerRestriction {
    pub subgroup: BTreeSet<SignedPerm>,
    pub restricted: BTreeSet<SignedPerm>,
    pub kernel_order: usize,
}

/// Basis of the left-padded subspace used for the stabilizer test.
fn padded_subspace_basis(
    ty: ClassicalType,
    small_ambient: usize,
    large_ambient: usize,
) -> Vec<CoordVector> {
    match ty {
        ClassicalType::A => (0..small_ambient - 1)
            .map(|j| {
                CoordVector::basis(large_ambient, j + 1).sub(&CoordVector::basis(large_ambient, j))
            })
            .collect(),
        _ => (0..small_ambient)
            .map(|j| CoordVector::basis(large_ambient, j))
            .collect(),
    }
}

/// Compute the stabilizer of the left-padded copy of the small space inside
/// the large group, and its restriction to the small coordinates.
///
/// The stabilizer is found by filtering the full enumeration (the product
/// formulas of the propagation analysis are assertions about the result, not
/// part of the computation).
pub fn stabilizer_restriction(
    large: &WeylGroup,
    small_ambient: usize,
) -> Result<StabilizerRestriction> {
    let ty = large.ctx.classical_type;
    let large_ambient = large.ctx.ambient_dim;
    if small_ambient > large_ambient {
        return Err(Error::DimensionMismatch(small_ambient, large_ambient));
    }
    let basis = padded_subspace_basis(ty, small_ambient, large_ambient);
    let mut subgroup = BTreeSet::new();
    let mut restricted = BTreeSet::new();
    for w in large.enumerate()? {
        if basis
            .iter()
            .all(|b| w.apply(b).supported_below(small_ambient))
        {
            subgroup.insert(w.clone());
            restricted.insert(restrict_element(w, small_ambient)?);
        }
    }
    if restricted.is_empty() {
        return Err(Error::internal("empty stabilizer"));
    }
    let kernel_order = subgroup.len() / restricted.len();
    if kernel_order * restricted.len() != subgroup.len() {
        return Err(Error::internal(
            "restriction image size does not divide the stabilizer order",
        ));
    }
    Ok(StabilizerRestriction {
        subgroup,
        restricted,
        kernel_order,
    })
}

/// Restrict a stabilizer element to the first `small_ambient` coordinates.
pub fn restrict_element(w: &SignedPerm, small_ambient: usize) -> Result<SignedPerm> {
    let mut perm = Vec::with_capacity(small_ambient);
    let mut signs = vec![1i8; small_ambient];
    for j in 0..small_ambient {
        let dst = w.image(j);
        if dst >= small_ambient {
            return Err(Error::internal(
                "element does not stabilize the coordinate subspace",
            ));
        }
        perm.push(dst);
        signs[dst] = w.sign(dst);
    }
    SignedPerm::new(perm, signs)
}

/// Report for the Weyl-restriction theorem check on a propagation pair.
#[derive(Debug, Clone)]
pub struct RestrictionTheoremReport {
    pub ty: ClassicalType,
    pub small_rank: usize,
    pub large_rank: usize,
    pub subgroup_order: usize,
    pub restricted_order: usize,
    pub small_order: usize,
    pub kernel_order: usize,
    /// A/B/C: restricted == small Weyl group. D: strict containment of index 2.
    pub equality: bool,
    pub strict_index_two: bool,
    /// Type D only: the extended stabilizer restricts onto the extended small group.
    pub extended_equality: Option<bool>,
    pub pass: bool,
}

/// Check the restriction behaviour of Weyl groups under propagation: equality
/// of the restricted stabilizer with the small Weyl group for types A/B/C,
/// strict index-two containment plus extended-group equality for type D.
pub fn check_restriction_theorem(
    ty: ClassicalType,
    n: usize,
    k: usize,
) -> Result<RestrictionTheoremReport> {
    if n > k {
        return Err(Error::BadParams("need n <= k".into()));
    }
    let small_ctx = crate::rootsys::build_permissive(ty, n)?;
    let large_ctx = crate::rootsys::build_permissive(ty, k)?;
    let small = WeylGroup::new(small_ctx.clone(), false)?;
    let large = WeylGroup::new(large_ctx.clone(), false)?;
    let sr = stabilizer_restriction(&large, small_ctx.ambient_dim)?;
    let small_set = small.enumerate()?;

    let equality = &sr.restricted == small_set;
    let contains_all = small_set.iter().all(|w| sr.restricted.contains(w));
    let strict_index_two = contains_all && sr.restricted.len() == 2 * small_set.len();

    let mut extended_equality = None;
    let pass = match ty {
        ClassicalType::A | ClassicalType::B | ClassicalType::C => equality,
        ClassicalType::D => {
            let ext_small = WeylGroup::new(small_ctx.clone(), true)?;
            let ext_large = WeylGroup::new(large_ctx, true)?;
            let ext_sr = stabilizer_restriction(&ext_large, small_ctx.ambient_dim)?;
            let ext_eq = &ext_sr.restricted == ext_small.enumerate()?;
            extended_equality = Some(ext_eq);
            if n == k {
                // Identity embedding: no strictness to observe.
                equality && ext_eq
            } else {
                let matches_extended = &sr.restricted == ext_small.enumerate()?;
                strict_index_two && matches_extended && ext_eq
            }
        }
    };

    Ok(RestrictionTheoremReport {
        ty,
        small_rank: n,
        large_rank: k,
        subgroup_order: sr.subgroup.len(),
        restricted_order: sr.restricted.len(),
        small_order: small_set.len(),
        kernel_order: sr.kernel_order,
        equality,
        strict_index_two,
        extended_equality,
        pass,
    })
}

/// Report for the negative example: removing an interior (or right-end) node
/// instead of left-end propagation breaks the restriction theorem.
#[derive(Debug, Clone)]
pub struct RemovalCounterexampleReport {
    /// B_3, subspace span(f_2, f_3): order of the restricted stabilizer.
    pub span23_restricted_order: usize,
    /// Order of the group generated by the surviving simple reflection on that span.
    pub span23_subdiagram_order: usize,
    pub span23_contains_minus_id: bool,
    pub span23_strictly_larger: bool,
    /// B_3, trace-zero plane (A_2 factor after removing the right-end node):
    /// minus-id restricts from the stabilizer but is not in the S_3 Weyl group.
    pub a2_contains_minus_id: bool,
    pub a2_minus_id_in_small: bool,
    pub a2_strictly_larger: bool,
    /// The check passes when the failure is detected in both encodings.
    pub pass: bool,
}

/// Encode the negative example: inside `W(B_3)`, stabilizers of subspaces
/// obtained by deleting a node that is not at the left diagram end restrict to
/// strictly more than the Weyl group of the surviving factors.
pub fn removal_counterexample() -> Result<RemovalCounterexampleReport> {
    let ctx = crate::rootsys::build(ClassicalType::B, 3)?;
    let group = WeylGroup::new(ctx.clone(), false)?;

    // Scenario 1: remove alpha_2 = f_2 - f_1 (interior node) and keep the
    // coordinate plane span(f_2, f_3). The stabilizer restricts to all signed
    // permutations of two coordinates; the surviving simple reflection
    // s_{f_3 - f_2} generates only a 2-element group there.
    let basis = [CoordVector::basis(3, 1), CoordVector::basis(3, 2)];
    let mut restricted = BTreeSet::new();
    for w in group.enumerate()? {
        if basis.iter().all(|b| {
            let img = w.apply(b);
            img.0[0].is_zero()
        }) {
            // Restrict to coordinates 2,3.
            let mut perm = Vec::new();
            let mut signs = vec![1i8; 2];
            for j in 1..3 {
                let dst = w.image(j);
                perm.push(dst - 1);
                signs[dst - 1] = w.sign(dst);
            }
            restricted.insert(SignedPerm::new(perm, signs)?);
        }
    }
    let minus_id2 = SignedPerm::new(vec![0, 1], vec![-1, -1])?;
    let span23_contains_minus_id = restricted.contains(&minus_id2);
    let subdiagram_order = 2; // {1, s_{f_3 - f_2}} restricted to the plane
    let span23_strictly_larger = restricted.len() > subdiagram_order;

    // Scenario 2: remove alpha_1 = f_1 (right-end node); the surviving
    // {alpha_2, alpha_3} span the trace-zero plane, an A_2 factor. Restricting
    // the stabilizer of that plane yields -id (from the global sign change),
    // which the S_3 Weyl group of A_2 does not contain.
    let a2_basis = [
        CoordVector::basis(3, 1).sub(&CoordVector::basis(3, 0)),
        CoordVector::basis(3, 2).sub(&CoordVector::basis(3, 1)),
    ];
    let in_plane = |v: &CoordVector| v.is_traceless();
    let mut stab_matrices: Vec<SignedPerm> = Vec::new();
    for w in group.enumerate()? {
        if a2_basis.iter().all(|b| in_plane(&w.apply(b))) {
            stab_matrices.push(w.clone());
        }
    }
    // -id on the plane: w acts as -id iff w(b) = -b for the plane basis.
    let minus_id_on_plane = |w: &SignedPerm| a2_basis.iter().all(|b| w.apply(b) == b.neg());
    let a2_contains_minus_id = stab_matrices.iter().any(minus_id_on_plane);
    // The A_2 Weyl group inside W(B_3) is generated by the two transpositions.
    let s3 = {
        let gens = [
            SignedPerm::transposition(3, 0, 1),
            SignedPerm::transposition(3, 1, 2),
        ];
        let mut set = BTreeSet::new();
        set.insert(SignedPerm::identity(3));
        let mut frontier: Vec<SignedPerm> = vec![SignedPerm::identity(3)];
        while let Some(w) = frontier.pop() {
            for g in &gens {
                let wg = g.compose(&w);
                if set.insert(wg.clone()) {
                    frontier.push(wg);
                }
            }
        }
        set
    };
    let a2_minus_id_in_small = s3.iter().any(minus_id_on_plane);
    // Count distinct restrictions to the plane via images of the basis.
    let mut images = BTreeSet::new();
    for w in &stab_matrices {
        images.insert((w.apply(&a2_basis[0]), w.apply(&a2_basis[1])));
    }
    let a2_strictly_larger = images.len() > s3.len();

    let pass = span23_contains_minus_id
        && span23_strictly_larger
        && a2_contains_minus_id
        && !a2_minus_id_in_small
        && a2_strictly_larger;

    Ok(RemovalCounterexampleReport {
        span23_restricted_order: restricted.len(),
        span23_subdiagram_order: subdiagram_order,
        span23_contains_minus_id,
        span23_strictly_larger,
        a2_contains_minus_id,
        a2_minus_id_in_small,
        a2_strictly_larger,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_permissive;

    #[test]
    fn compose_and_inverse() {
        let a = SignedPerm::new(vec![1, 2, 0], vec![1, -1, 1]).unwrap();
        let b = SignedPerm::new(vec![0, 2, 1], vec![-1, 1, -1]).unwrap();
        let ab = a.compose(&b);
        let x = CoordVector::from_i64(&[2, 3, 5]);
        assert_eq!(ab.apply(&x), a.apply(&b.apply(&x)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn reflection_forms() {
        let ctx = build_permissive(ClassicalType::B, 3).unwrap();
        // s_{f_1}: sign change on coordinate 1.
        let alpha = CoordVector::basis(3, 0);
        let s = reflection(&ctx, &alpha).unwrap();
        assert_eq!(
            s.apply(&CoordVector::from_i64(&[1, 2, 3])),
            CoordVector::from_i64(&[-1, 2, 3])
        );
        // s_{f_2 - f_1}: transposition.
        let alpha = CoordVector::basis(3, 1).sub(&CoordVector::basis(3, 0));
        let s = reflection(&ctx, &alpha).unwrap();
        assert_eq!(
            s.apply(&CoordVector::from_i64(&[1, 2, 3])),
            CoordVector::from_i64(&[2, 1, 3])
        );
        // s_{f_1 + f_2}: swap with both signs.
        let alpha = CoordVector::basis(3, 0).add(&CoordVector::basis(3, 1));
        let s = reflection(&ctx, &alpha).unwrap();
        assert_eq!(
            s.apply(&CoordVector::from_i64(&[1, 2, 3])),
            CoordVector::from_i64(&[-2, -1, 3])
        );
        // Involution.
        assert!(s.compose(&s).is_identity());
        // Not a root.
        assert!(matches!(
            reflection(&ctx, &CoordVector::from_i64(&[1, 1, 1])),
            Err(Error::NotARoot)
        ));
    }

    #[test]
    fn enumerate_small_orders() {
        for (ty, rank, expect) in [
            (ClassicalType::A, 2, 6u128),
            (ClassicalType::B, 1, 2),
            (ClassicalType::B, 2, 8),
            (ClassicalType::C, 3, 48),
            (ClassicalType::D, 4, 192),
        ] {
            let g = WeylGroup::new(build_permissive(ty, rank).unwrap(), false).unwrap();
            assert_eq!(g.order().unwrap(), expect, "{ty:?}_{rank}");
        }
        let g = WeylGroup::new(build_permissive(ClassicalType::D, 4).unwrap(), true).unwrap();
        assert_eq!(g.order().unwrap(), 384);
    }

    #[test]
    fn dets_match_matrix_form() {
        let g = WeylGroup::new(build_permissive(ClassicalType::B, 3).unwrap(), false).unwrap();
        for w in g.enumerate().unwrap() {
            let m = w.matrix();
            let d = crate::linalg::det(&m);
            assert_eq!(d, crate::ratio::rat(w.det() as i64));
        }
    }

    #[test]
    fn elements_permute_roots() {
        for (ty, rank) in [
            (ClassicalType::A, 4),
            (ClassicalType::B, 5),
            (ClassicalType::C, 3),
            (ClassicalType::D, 4),
        ] {
            let ctx = build_permissive(ty, rank).unwrap();
            let g = WeylGroup::new(ctx.clone(), false).unwrap();
            for w in g.enumerate().unwrap() {
                for alpha in &ctx.roots {
                    assert!(ctx.roots.contains(&w.apply(alpha)));
                }
            }
        }
    }

    #[test]
    fn enumeration_cap_refused_with_predicted_order() {
        let g = WeylGroup::new(build_permissive(ClassicalType::B, 12).unwrap(), false).unwrap();
        match g.enumerate() {
            Err(Error::EnumerationCap { predicted, cap }) => {
                assert_eq!(predicted, (1u128 << 12) * (1..=12u128).product::<u128>());
                assert_eq!(cap, ENUMERATION_CAP);
            }
            other => panic!("expected cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn stabilizer_b_2_in_3() {
        let large = WeylGroup::new(build_permissive(ClassicalType::B, 3).unwrap(), false).unwrap();
        let sr = stabilizer_restriction(&large, 2).unwrap();
        assert_eq!(sr.subgroup.len(), 16);
        assert_eq!(sr.restricted.len(), 8);
        assert_eq!(sr.kernel_order, 2);
    }

    #[test]
    fn restriction_theorem_spot_checks() {
        let r = check_restriction_theorem(ClassicalType::B, 2, 4).unwrap();
        assert!(r.pass && r.equality);
        let r = check_restriction_theorem(ClassicalType::A, 1, 2).unwrap();
        assert!(r.pass && r.equality);
        assert_eq!(r.kernel_order, 1); // the S_{k-n} = S_1 factor is trivial here
        let r = check_restriction_theorem(ClassicalType::A, 1, 3).unwrap();
        assert!(r.pass && r.equality);
        assert_eq!(r.kernel_order, 2); // S_{k-n} = S_2
        let r = check_restriction_theorem(ClassicalType::D, 4, 5).unwrap();
        assert!(r.pass);
        assert!(r.strict_index_two);
        assert_eq!(r.restricted_order, 384);
        assert_eq!(r.extended_equality, Some(true));
        // The parity constraint kills the would-be sign kernel: the stabilizer
        // restricts faithfully here.
        assert_eq!(r.subgroup_order, 384);
        assert_eq!(r.kernel_order, 1);
        // Identity embedding is trivially equal.
        let r = check_restriction_theorem(ClassicalType::A, 3, 3).unwrap();
        assert!(r.pass && r.equality);
    }

    #[test]
    fn restriction_is_homomorphism_exhaustive() {
        let large = WeylGroup::new(build_permissive(ClassicalType::B, 4).unwrap(), false).unwrap();
        let sr = stabilizer_restriction(&large, 2).unwrap();
        let subgroup: Vec<_> = sr.subgroup.iter().collect();
        for v in &subgroup {
            for w in &subgroup {
                let lhs = restrict_element(&v.compose(w), 2).unwrap();
                let rhs = restrict_element(v, 2)
                    .unwrap()
                    .compose(&restrict_element(w, 2).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn negative_example_detected() {
        let r = removal_counterexample().unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.span23_restricted_order, 8);
    }
}
