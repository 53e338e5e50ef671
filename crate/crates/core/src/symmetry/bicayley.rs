//! The set `F` of automorphisms `sigma_{alpha,x}` of a bi-Cayley graph
//! `BiCay(H, {}, {}, S)` over an abelian group, and the group
//! `N = R(H) <F, delta>` they generate together with the swap `delta`.

use serde::Serialize;

use super::SymmetryError;
use crate::construct::bicayley;
use crate::groups::{abelian_automorphisms, AbelianGroup, FiniteGroup, Perm, PermGroup, AUT_ENUMERATION_CAP};

/// `N` is also enumerated when the graph has at most this many vertices.
pub const NORMALIZER_CLOSURE_VERTICES: usize = 600;

#[derive(Debug, Clone, Serialize)]
pub struct BicayleyNormalizer {
    #[serde(skip)]
    pub f: Vec<Perm>,
    #[serde(skip)]
    pub delta: Perm,
    #[serde(skip)]
    pub regular: Vec<Perm>,
    pub f_order: usize,
    pub h_order: usize,
    /// `2 |H| |F|`.
    pub normalizer_order: u128,
    pub closure_checked: bool,
}

/// `h_i -> (h + g)_i`.
fn translation(h: &AbelianGroup, g: &[u64]) -> Perm {
    let n = h.order();
    let images = (0..2 * n)
        .map(|v| {
            let (side, i) = (v / n, v % n);
            side * n + h.rank(&h.add(&h.unrank(i), g))
        })
        .collect();
    Perm::from_images(images).unwrap()
}

fn is_translation(h: &AbelianGroup, p: &Perm) -> bool {
    p.apply(0) < h.order() && *p == translation(h, &h.unrank(p.apply(0)))
}

/// All `sigma_{alpha,x}` with `alpha in Aut(H)` and `S^alpha = -x + S`, on the
/// `2|H|` vertices `h_0 = rank(h)`, `h_1 = |H| + rank(h)`. Requires `0 in S`.
pub fn bicayley_f(h: &AbelianGroup, s: &[Vec<u64>]) -> Result<BicayleyNormalizer, SymmetryError> {
    let n = h.order();
    if n > AUT_ENUMERATION_CAP {
        return Err(SymmetryError::Invalid(format!("|H| = {n} exceeds the cap {AUT_ENUMERATION_CAP}")));
    }
    let zero = h.zero();
    if !s.contains(&zero) {
        return Err(SymmetryError::Invalid("S must contain the identity".into()));
    }
    let graph = bicayley(h, &[], &[], s).map_err(|e| SymmetryError::Invalid(e.to_string()))?;
    let sorted = |xs: Vec<Vec<u64>>| {
        let mut r: Vec<usize> = xs.iter().map(|x| h.rank(x)).collect();
        r.sort_unstable();
        r
    };
    let mut f = Vec::new();
    for alpha in abelian_automorphisms(h)? {
        let image = sorted(s.iter().map(|x| alpha.apply(h, x)).collect());
        for x in s {
            if sorted(s.iter().map(|y| h.sub(y, x)).collect()) != image {
                continue;
            }
            let images = (0..2 * n)
                .map(|v| {
                    let a = alpha.apply(h, &h.unrank(v % n));
                    if v < n {
                        h.rank(&a)
                    } else {
                        n + h.rank(&h.add(x, &a))
                    }
                })
                .collect();
            f.push(Perm::from_images(images)?);
        }
    }
    let delta = Perm::from_images(
        (0..2 * n).map(|v| (1 - v / n) * n + h.rank(&h.neg(&h.unrank(v % n)))).collect(),
    )?;
    let regular: Vec<Perm> = h.generators().iter().map(|g| translation(h, g)).collect();

    let fail = |what: &str| Err(SymmetryError::Invalid(format!("bi-Cayley normalizer: {what}")));
    if let Some(p) = f.iter().chain([&delta]).find(|p| !graph.is_automorphism(p)) {
        return Err(SymmetryError::Unverified(format!("{p:?} is not an automorphism")));
    }
    if f.iter().any(|p| p.apply(0) != 0) {
        return fail("an element of F moves 1_0");
    }
    let index: std::collections::HashSet<&Perm> = f.iter().collect();
    if index.len() != f.len() {
        return fail("repeated element in F");
    }
    if f.iter().any(|a| f.iter().any(|b| !index.contains(&a.then(b)))) {
        return fail("F is not closed");
    }
    // delta sigma delta lies in R(H) F: translate the image of 1_0 back
    let in_rf = |c: Perm| {
        let g = c.apply(0);
        g < n && index.contains(&c.then(&translation(h, &h.neg(&h.unrank(g)))))
    };
    if f.iter().any(|a| !in_rf(a.conjugate_by(&delta))) {
        return fail("delta does not normalize R(H) F");
    }
    if f.iter().chain([&delta]).any(|p| regular.iter().any(|r| !is_translation(h, &r.conjugate_by(p)))) {
        return fail("F or delta does not normalize R(H)");
    }
    // F fixes 1_0 and R(H) is regular on each part, so |R(H) F| = |H| |F|;
    // delta normalizes R(H) F, swaps the parts and squares to 1.
    let normalizer_order = 2 * n as u128 * f.len() as u128;
    let closure_checked = 2 * n <= NORMALIZER_CLOSURE_VERTICES;
    if closure_checked {
        let gens: Vec<Perm> = regular.iter().chain(&f).chain([&delta]).cloned().collect();
        let counted = PermGroup::new(2 * n, gens)?.closure()?.len() as u128;
        if counted != normalizer_order {
            return fail(&format!("closure has {counted} elements, expected {normalizer_order}"));
        }
    }
    Ok(BicayleyNormalizer {
        f_order: f.len(),
        h_order: n,
        f,
        delta,
        regular,
        normalizer_order,
        closure_checked,
    })
}
