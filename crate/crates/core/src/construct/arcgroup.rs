//! The arc-transitive group `R(G) : <alpha>` of a dihedrant family and the
//! normal cyclic subgroup whose quotient is the order-`2p` base graph.

use super::families::{DihAutomorphism, Family, FamilyInstance, Params, SourceGroup};
use super::ConstructError;
use crate::groups::{
    is_semiregular, right_multiplication, FiniteGroup, GDihElement, GeneralizedDihedral, Perm, PermGroup,
};
use crate::modarith::{factorize, inverse_mod, poly_roots, reduce, ModPoly};

/// Orders up to this are also confirmed by enumerating the whole group.
pub const ARC_GROUP_CLOSURE_CHECK: u128 = 20_000;

#[derive(Debug, Clone)]
pub struct ArcGroup {
    /// `R(G)` generators followed by `alpha` (and `beta`).
    pub group: PermGroup,
    pub regular: PermGroup,
    pub alpha: Perm,
    pub beta: Option<Perm>,
    /// `|G| * |<alpha, beta>|`: the point stabilizer of the identity is `<alpha, beta>`.
    pub order: u128,
    pub stabilizer_order: u128,
    /// Set when the order was also confirmed by full enumeration.
    pub enumerated: bool,
}

fn dihedral_parts(
    inst: &FamilyInstance,
) -> Option<(&GeneralizedDihedral, &[GDihElement], &DihAutomorphism, Option<&DihAutomorphism>)> {
    match &inst.source {
        SourceGroup::Dihedral { group, connection_set, alpha: Some(alpha), beta } => {
            Some((group, connection_set, alpha, beta.as_ref()))
        }
        _ => None,
    }
}

fn check_automorphism(
    inst: &FamilyInstance,
    name: &str,
    group: &GeneralizedDihedral,
    t: &[GDihElement],
    aut: &DihAutomorphism,
) -> Result<Perm, ConstructError> {
    let fail = |what: String| ConstructError::Verification(format!("{}: {name} {what}", inst.label()));
    let perm = aut.vertex_perm(group);
    // multiplicativity on generators of G against arbitrary elements
    for g in group.generators() {
        for i in 0..group.order() {
            let x = group.unrank(i);
            let lhs = aut.apply(group, &group.multiply(&x, &g));
            let rhs = group.multiply(&aut.apply(group, &x), &aut.apply(group, &g));
            if lhs != rhs {
                return Err(fail("is not a group homomorphism".into()));
            }
        }
    }
    let mut image: Vec<GDihElement> = t.iter().map(|x| aut.apply(group, x)).collect();
    image.sort();
    let mut sorted = t.to_vec();
    sorted.sort();
    if image != sorted {
        return Err(fail("does not fix the connection set".into()));
    }
    if !inst.graph.is_automorphism(&perm) {
        return Err(fail("is not a graph automorphism".into()));
    }
    for s in t {
        let lhs = right_multiplication(group, s).conjugate_by(&perm);
        if lhs != right_multiplication(group, &aut.apply(group, s)) {
            return Err(fail("does not conjugate R(s) to R(s^alpha)".into()));
        }
    }
    Ok(perm)
}

/// `<R(G), alpha>` (with `beta` for `CGD^4`, `m` in `{1, 5}`), every generator verified.
pub fn canonical_arc_group(inst: &FamilyInstance) -> Result<ArcGroup, ConstructError> {
    let (group, t, alpha, beta) = dihedral_parts(inst)
        .ok_or_else(|| ConstructError::NotApplicable(format!("the canonical arc group of {}", inst.label())))?;
    let alpha_perm = check_automorphism(inst, "alpha", group, t, alpha)?;
    // alpha is a 5-cycle on T
    let mut x = t[0].clone();
    let mut orbit = vec![x.clone()];
    loop {
        x = alpha.apply(group, &x);
        if x == t[0] {
            break;
        }
        orbit.push(x.clone());
    }
    if orbit.len() != 5 {
        return Err(ConstructError::Verification(format!(
            "{}: alpha has an orbit of length {} on the connection set",
            inst.label(),
            orbit.len()
        )));
    }
    let beta_perm = beta.map(|b| check_automorphism(inst, "beta", group, t, b)).transpose()?;

    let regular_gens: Vec<Perm> = group.generators().iter().map(|g| right_multiplication(group, g)).collect();
    let regular = PermGroup::new(group.order(), regular_gens.clone())?;
    let mut stab_gens = vec![alpha_perm.clone()];
    stab_gens.extend(beta_perm.clone());
    let stabilizer = PermGroup::new(group.order(), stab_gens.clone())?;
    let stabilizer_order = stabilizer.close(1000)?.len() as u128;
    let order = group.order() as u128 * stabilizer_order;
    let mut gens = regular_gens;
    gens.extend(stab_gens);
    let arc = PermGroup::new(group.order(), gens)?;
    let enumerated = order <= ARC_GROUP_CLOSURE_CHECK;
    if enumerated {
        let counted = arc.closure()?.len() as u128;
        if counted != order {
            return Err(ConstructError::Verification(format!(
                "{}: arc group has {counted} elements, expected {order}",
                inst.label()
            )));
        }
    }
    Ok(ArcGroup { group: arc, regular, alpha: alpha_perm, beta: beta_perm, order, stabilizer_order, enumerated })
}

/// A semiregular normal cyclic subgroup and the instance its quotient should match.
#[derive(Debug, Clone)]
pub struct CoverSubgroup {
    pub group: PermGroup,
    pub order: u64,
    /// Human-readable generators, e.g. `R(a), R(b^5 c^3)`.
    pub description: String,
    pub base: (Family, Params),
    /// Whether `beta` also normalizes the subgroup (only when `beta` exists).
    pub normalized_by_beta: Option<bool>,
}

fn zp_inv(x: i128, p: u64) -> Result<i128, ConstructError> {
    let v = reduce(x, p);
    inverse_mod(v, p).map(|i| i as i128).ok_or(ConstructError::Arith(
        crate::modarith::ModArithError::NotInvertible { value: v, modulus: p },
    ))
}

/// `b`- and `c`-exponents of the second generator of `N_i`.
fn second_generator(inst: &FamilyInstance, index: u8) -> Result<(i128, i128), ConstructError> {
    let p = inst.params.p;
    let l = inst.lambda.expect("cgd instances carry lambda") as i128;
    let lp = l.rem_euclid(p as i128);
    let poly = |coeffs: &[i128]| coeffs.iter().rev().fold(0i128, |acc, &c| (acc * lp + c).rem_euclid(p as i128));
    match index {
        1 => Ok((5, poly(&[1, -1, 2, 0, 3]))),
        2 => Ok((-5, poly(&[3, 1, 4, 2]))),
        3 => Ok((-5, poly(&[1, 2, 3, 4]))),
        4 if p == 5 => Ok((2, 4)),
        4 if (p + 1).is_multiple_of(5) => Err(ConstructError::NotApplicable(format!(
            "a normal cyclic subgroup with quotient of order 2p for {}",
            inst.label()
        ))),
        4 => {
            let pi = p as i128;
            let target = (2 * lp - 5).rem_euclid(pi);
            let roots = poly_roots(&ModPoly::quartic_10_5(p)?)?;
            for t in roots.iter().map(|t| t.value() as i128) {
                if (t * t).rem_euclid(pi) == target {
                    return Ok((t + 1, lp - 3));
                }
                let u = (zp_inv(2, p)? * (t + 5 * zp_inv(t, p)?)).rem_euclid(pi);
                if (u * u).rem_euclid(pi) == target {
                    return Ok((u + 1, lp - 3));
                }
            }
            Err(ConstructError::Verification(format!(
                "{}: no root t of x^4+10x^2+5 matches 2*lambda-5",
                inst.label()
            )))
        }
        _ => {
            let pi = p as i128;
            let t = (2 * zp_inv(lp * lp + 5, p)?).rem_euclid(pi);
            let b = (t * (lp * lp * lp + 10 * lp + 5) - (lp + 3)).rem_euclid(pi);
            Ok((b, 4))
        }
    }
}

/// The explicit normal cyclic subgroup of a `CGD` instance, or `<R(a^q)>` for
/// `CD_m` with composite `m` and `q` its largest prime factor.
pub fn canonical_cover_subgroup(inst: &FamilyInstance) -> Result<CoverSubgroup, ConstructError> {
    let not_applicable =
        || ConstructError::NotApplicable(format!("a canonical cover subgroup of {}", inst.label()));
    let (group, _, _, beta) = dihedral_parts(inst).ok_or_else(not_applicable)?;
    let (gens, description, order, base) = match inst.family {
        Family::Cd => {
            let m = inst.params.m;
            let q = factorize(m).last().map(|&(q, _)| q).ok_or_else(not_applicable)?;
            if q == m {
                return Err(not_applicable());
            }
            let gen = group.rotation(&[q as i128]);
            (
                vec![right_multiplication(group, &gen)],
                format!("R(a^{q})"),
                m / q,
                (Family::Cd, Params { m: q, p: 0, e: 0 }),
            )
        }
        f => {
            let index = f.cgd_index().ok_or_else(not_applicable)?;
            let (b, c) = second_generator(inst, index)?;
            let Params { m, p, e } = inst.params;
            let q = p.pow(e);
            let b = b.rem_euclid(q as i128);
            let c = c.rem_euclid(p as i128);
            let gens = vec![
                right_multiplication(group, &group.rotation(&[1, 0, 0])),
                right_multiplication(group, &group.rotation(&[0, b, c])),
            ];
            let base = if p == 5 { (Family::K55, Params::default()) } else { (Family::Cd, Params { m: p, p: 0, e: 0 }) };
            (gens, format!("R(a), R(b^{b} c^{c})"), m * q, base)
        }
    };
    let n = PermGroup::new(group.order(), gens)?;
    let fail = |what: String| ConstructError::Verification(format!("{}: cover subgroup {description} {what}", inst.label()));
    let size = n.closure()?.len() as u64;
    if size != order {
        return Err(fail(format!("has order {size}, expected {order}")));
    }
    if !n.is_abelian() || !n.closure()?.iter().any(|x| x.order() == order) {
        return Err(fail("is not cyclic".into()));
    }
    if !is_semiregular(&n)? {
        return Err(fail("is not semiregular".into()));
    }
    let arc = canonical_arc_group(inst)?;
    // beta is checked separately, normality is required in <R(G), alpha>
    let alpha_part = PermGroup::new(
        group.order(),
        arc.regular.generators().iter().cloned().chain([arc.alpha.clone()]).collect(),
    )?;
    if !alpha_part.normalizes(&n)? {
        return Err(fail("is not normal in <R(G), alpha>".into()));
    }
    let normalized_by_beta = match (&arc.beta, beta) {
        (Some(b), Some(_)) => {
            let conj = PermGroup::new(group.order(), vec![b.clone()])?;
            Some(conj.normalizes(&n)?)
        }
        _ => None,
    };
    Ok(CoverSubgroup { group: n, order, description, base, normalized_by_beta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::family;

    fn inst(f: Family, m: u64, p: u64, e: u32) -> FamilyInstance {
        family(f, Params { m, p, e }).unwrap()
    }

    #[test]
    fn arc_group_orders() {
        let a = canonical_arc_group(&inst(Family::Cd, 11, 0, 0)).unwrap();
        assert_eq!(a.order, 110);
        assert!(a.enumerated);
        let a = canonical_arc_group(&inst(Family::Cgd4, 1, 5, 1)).unwrap();
        assert_eq!(a.stabilizer_order, 10);
        let a = canonical_arc_group(&inst(Family::Cgd1, 1, 11, 2)).unwrap();
        assert_eq!(a.order, 13310);
        for f in [Family::Cgd2, Family::Cgd3] {
            assert_eq!(canonical_arc_group(&inst(f, 1, 11, 2)).unwrap().order, 13310);
        }
        assert_eq!(canonical_arc_group(&inst(Family::Cgd5, 1, 11, 1)).unwrap().order, 1210);
        assert_eq!(canonical_arc_group(&inst(Family::Cgd4, 1, 11, 1)).unwrap().order, 2420);
        assert!(canonical_arc_group(&inst(Family::Cgd125, 0, 0, 0)).is_err());
        assert!(canonical_arc_group(&inst(Family::G48, 0, 0, 0)).is_err());
    }

    #[test]
    fn cover_subgroups() {
        for (f, m, p, e, order) in [
            (Family::Cgd1, 1, 11, 2, 121),
            (Family::Cgd2, 1, 11, 2, 121),
            (Family::Cgd3, 1, 11, 2, 121),
            (Family::Cgd4, 1, 5, 1, 5),
            (Family::Cgd4, 1, 11, 1, 11),
            (Family::Cgd4, 11, 5, 1, 55),
            (Family::Cgd5, 1, 11, 1, 11),
            (Family::Cgd5, 1, 31, 1, 31),
            (Family::Cd, 55, 0, 0, 5),
        ] {
            let i = inst(f, m, p, e);
            let c = canonical_cover_subgroup(&i).unwrap_or_else(|err| panic!("{}: {err}", i.label()));
            assert_eq!(c.order, order, "{}", i.label());
        }
        let c = canonical_cover_subgroup(&inst(Family::Cgd4, 1, 5, 1)).unwrap();
        assert_eq!(c.description, "R(a), R(b^2 c^4)");
        assert_eq!(c.normalized_by_beta, Some(true));
        // normal in <R(G), alpha> only
        let c = canonical_cover_subgroup(&inst(Family::Cgd4, 1, 11, 1)).unwrap();
        assert_eq!(c.normalized_by_beta, Some(false));
        assert!(matches!(
            canonical_cover_subgroup(&inst(Family::Cgd4, 1, 19, 1)),
            Err(ConstructError::NotApplicable(_))
        ));
        assert!(matches!(canonical_cover_subgroup(&inst(Family::Cd, 11, 0, 0)), Err(ConstructError::NotApplicable(_))));
    }
}
