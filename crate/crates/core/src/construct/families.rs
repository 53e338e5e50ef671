//! The named graphs: five `CGD` families on `Dih(Z_m x Z_{p^e} x Z_p)`, the
//! dihedral family `CD_m`, `CGD_{5^3}`, the four covers of `K_6`, and
//! four small literal graphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{cayley, generates, ConstructError, Expected, Manifest};
use crate::graph::Graph;
use crate::groups::{
    AbelianAut, AbelianGroup, EnumeratedGroup, FiniteGroup, GDihElement, GeneralizedDihedral, Perm,
    CLOSURE_CAP,
};
use crate::modarith::{
    gcd, inverse_mod, is_prime, order5_unit, poly_roots, reduce, solve_eq1, sqrt_mod, ModPoly, Residue,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    K6,
    K55,
    K66Minus6K2,
    Icosahedron,
    I12Double,
    G48,
    G60,
    G120,
    Cgd125,
    Cd,
    Cgd1,
    Cgd2,
    Cgd3,
    Cgd4,
    Cgd5,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::K6,
        Family::K55,
        Family::K66Minus6K2,
        Family::Icosahedron,
        Family::I12Double,
        Family::G48,
        Family::G60,
        Family::G120,
        Family::Cgd125,
        Family::Cd,
        Family::Cgd1,
        Family::Cgd2,
        Family::Cgd3,
        Family::Cgd4,
        Family::Cgd5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::K6 => "k6",
            Family::K55 => "k55",
            Family::K66Minus6K2 => "k66-6k2",
            Family::Icosahedron => "i12",
            Family::I12Double => "i12-2",
            Family::G48 => "g48",
            Family::G60 => "g60",
            Family::G120 => "g120",
            Family::Cgd125 => "cgd125",
            Family::Cd => "cd",
            Family::Cgd1 => "cgd1",
            Family::Cgd2 => "cgd2",
            Family::Cgd3 => "cgd3",
            Family::Cgd4 => "cgd4",
            Family::Cgd5 => "cgd5",
        }
    }

    /// 1..=5 for the `CGD^i` families.
    pub fn cgd_index(self) -> Option<u8> {
        match self {
            Family::Cgd1 => Some(1),
            Family::Cgd2 => Some(2),
            Family::Cgd3 => Some(3),
            Family::Cgd4 => Some(4),
            Family::Cgd5 => Some(5),
            _ => None,
        }
    }

    pub fn uses_m(self) -> bool {
        self == Family::Cd || self.cgd_index().is_some()
    }

    pub fn uses_p(self) -> bool {
        self.cgd_index().is_some()
    }

    pub fn uses_e(self) -> bool {
        matches!(self, Family::Cgd1 | Family::Cgd2 | Family::Cgd3)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let squash = |x: &str| x.to_ascii_lowercase().replace(['_', '-'], "");
        Family::ALL
            .into_iter()
            .find(|f| squash(f.name()) == squash(s))
            .ok_or_else(|| ConstructError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub m: u64,
    pub p: u64,
    pub e: u32,
}

/// An automorphism of `Dih(H)` fixing the coset structure: `u -> A(u)` on
/// `H` and `h -> w h`, so `u h -> (A(u) + w) h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihAutomorphism {
    pub linear: AbelianAut,
    pub h_image: Vec<u64>,
}

impl DihAutomorphism {
    pub fn apply(&self, group: &GeneralizedDihedral, x: &GDihElement) -> GDihElement {
        let base = group.base();
        let mut v = self.linear.apply(base, &x.vector);
        if x.flip {
            v = base.add(&v, &self.h_image);
        }
        GDihElement { vector: v, flip: x.flip }
    }

    /// The induced permutation `g -> g^alpha` of the element ranks.
    pub fn vertex_perm(&self, group: &GeneralizedDihedral) -> Perm {
        let images = (0..group.order()).map(|i| group.rank(&self.apply(group, &group.unrank(i)))).collect();
        Perm::from_images(images).expect("group automorphisms are bijective")
    }
}

#[derive(Debug, Clone)]
pub enum SourceGroup {
    Dihedral {
        group: GeneralizedDihedral,
        connection_set: Vec<GDihElement>,
        alpha: Option<DihAutomorphism>,
        beta: Option<DihAutomorphism>,
    },
    Permutation { group: EnumeratedGroup, connection_set: Vec<Perm> },
    Literal,
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    pub params: Params,
    pub r: Option<u64>,
    pub lambda: Option<u64>,
    pub graph: Graph,
    pub source: SourceGroup,
    pub expected: Expected,
}

impl FamilyInstance {
    pub fn dihedral_group(&self) -> Option<&GeneralizedDihedral> {
        match &self.source {
            SourceGroup::Dihedral { group, .. } => Some(group),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        let f = self.family;
        match (f.uses_m(), f.uses_p(), f.uses_e()) {
            (true, true, true) => format!("{f}(m={}, p={}, e={})", self.params.m, self.params.p, self.params.e),
            (true, true, false) => format!("{f}(m={}, p={})", self.params.m, self.params.p),
            (true, false, false) => format!("{f}(m={})", self.params.m),
            _ => f.name().to_string(),
        }
    }

    /// The bi-Cayley connection set `{x in H : h x in T}` of a `CGD` instance,
    /// in the order the Cayley connection set lists it.
    pub fn bicayley_set(&self) -> Option<(AbelianGroup, Vec<Vec<u64>>)> {
        let SourceGroup::Dihedral { group, connection_set, .. } = &self.source else {
            return None;
        };
        self.family.cgd_index()?;
        let base = group.base();
        // h x = (-x, 1)
        Some((base.clone(), connection_set.iter().map(|t| base.neg(&t.vector)).collect()))
    }
}

/// Build `family` with canonical (smallest) roots.
pub fn family(family: Family, params: Params) -> Result<FamilyInstance, ConstructError> {
    family_with_roots(family, params, None, None)
}

fn side(family: Family, condition: impl Into<String>) -> ConstructError {
    ConstructError::SideCondition { family: family.name().into(), condition: condition.into() }
}

fn normalise_params(family: Family, params: Params) -> Params {
    Params {
        m: if family.uses_m() { params.m } else { 0 },
        p: if family.uses_p() { params.p } else { 0 },
        e: if family.uses_e() {
            params.e
        } else if family.uses_p() {
            1
        } else {
            0
        },
    }
}

/// Build `family`, optionally overriding the roots `r` (of the cyclotomic
/// quartic mod `m`) and `lambda`. Overrides are validated.
pub fn family_with_roots(
    family: Family,
    params: Params,
    r: Option<u64>,
    lambda: Option<u64>,
) -> Result<FamilyInstance, ConstructError> {
    if family.uses_p() && !family.uses_e() && params.e > 1 {
        return Err(side(family, "e = 1"));
    }
    let params = normalise_params(family, params);
    let expected_for = |params: &Params| Manifest::builtin().expected(family.name(), params);
    let literal = |graph: Graph| -> Result<FamilyInstance, ConstructError> {
        Ok(FamilyInstance {
            family,
            params,
            r: None,
            lambda: None,
            graph,
            source: SourceGroup::Literal,
            expected: expected_for(&params)?,
        })
    };
    match family {
        Family::K6 => literal(Graph::complete(6)),
        Family::K55 => literal(Graph::complete_bipartite(5, 5)),
        Family::K66Minus6K2 => literal(Graph::from_edges(
            12,
            (0..6).flat_map(|i| (0..6).filter(move |&j| j != i).map(move |j| (i, 6 + j))),
        )?),
        Family::Icosahedron => literal(icosahedron()),
        Family::I12Double => dihedral_sporadic(family, 12, &[0, 1, 2, 4, 9], expected_for(&params)?),
        Family::G48 => dihedral_sporadic(family, 24, &[0, 1, 3, 11, 20], expected_for(&params)?),
        Family::G60 | Family::G120 => permutation_sporadic(family, expected_for(&params)?),
        Family::Cgd125 => {
            let g = GeneralizedDihedral::new(AbelianGroup::new(&[5, 5, 5])?);
            let s: Vec<GDihElement> = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]
                .iter()
                .map(|x| g.times_h(x))
                .collect();
            finish_dihedral(family, params, None, None, g, s, None, None, expected_for(&params)?)
        }
        Family::Cd => build_cd(params, r, expected_for(&params)?),
        _ => build_cgd(family, params, r, lambda, expected_for(&params)?),
    }
}

fn icosahedron() -> Graph {
    // 0 and 11 are poles, 1..=5 and 6..=10 the two pentagons.
    let mut edges = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (low, low_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (11, low), (low, low_next), (up, low), (up, low_next)]);
    }
    Graph::from_edges(12, edges).unwrap()
}

fn dihedral_sporadic(
    family: Family,
    n: u64,
    exps: &[i128],
    expected: Expected,
) -> Result<FamilyInstance, ConstructError> {
    let g = GeneralizedDihedral::dihedral(n);
    // b a^k = h a^k
    let s = exps.iter().map(|&k| g.h_times(&[k])).collect();
    finish_dihedral(family, Params::default(), None, None, g, s, None, None, expected)
}

fn permutation_sporadic(family: Family, expected: Expected) -> Result<FamilyInstance, ConstructError> {
    // Points 1..=7 in cycle notation are 0..=6 here.
    let cycles: [&[&[usize]]; 5] =
        [&[&[0, 3], &[1, 4]], &[&[0, 2], &[1, 4]], &[&[0, 2], &[1, 3]], &[&[1, 3], &[2, 4]], &[&[0, 3], &[2, 4]]];
    let (degree, group, s) = if family == Family::G60 {
        let s: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(5, c)).collect::<Result<_, _>>()?;
        let a5 = vec![Perm::from_cycles(5, &[&[0, 1, 2]])?, Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]])?];
        (5, EnumeratedGroup::new(5, a5, CLOSURE_CAP)?, s)
    } else {
        let s: Vec<Perm> = cycles
            .iter()
            .map(|c| {
                let mut c = c.to_vec();
                c.push(&[5, 6]);
                Perm::from_cycles(7, &c)
            })
            .collect::<Result<_, _>>()?;
        (7, EnumeratedGroup::new(7, s.clone(), CLOSURE_CAP)?, s)
    };
    debug_assert_eq!(group.degree(), degree);
    let graph = cayley(&group, &s)?;
    check_graph(family, &graph, &expected)?;
    if !generates(&group, &s) {
        return Err(ConstructError::Verification(format!("{family}: connection set does not generate")));
    }
    Ok(FamilyInstance {
        family,
        params: Params::default(),
        r: None,
        lambda: None,
        graph,
        source: SourceGroup::Permutation { group, connection_set: s },
        expected,
    })
}

fn check_graph(family: Family, graph: &Graph, expected: &Expected) -> Result<(), ConstructError> {
    if graph.vertex_count() as u128 != expected.vertices {
        return Err(ConstructError::Verification(format!(
            "{family}: built {} vertices, expected {}",
            graph.vertex_count(),
            expected.vertices
        )));
    }
    if graph.regular_valency() != Some(5) {
        return Err(ConstructError::Verification(format!("{family}: graph is not pentavalent")));
    }
    if !graph.is_connected() {
        return Err(ConstructError::Verification(format!("{family}: graph is disconnected")));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn finish_dihedral(
    family: Family,
    params: Params,
    r: Option<u64>,
    lambda: Option<u64>,
    group: GeneralizedDihedral,
    connection_set: Vec<GDihElement>,
    alpha: Option<DihAutomorphism>,
    beta: Option<DihAutomorphism>,
    expected: Expected,
) -> Result<FamilyInstance, ConstructError> {
    let graph = cayley(&group, &connection_set)?;
    check_graph(family, &graph, &expected)?;
    if !generates(&group, &connection_set) {
        return Err(ConstructError::Verification(format!("{family}: connection set does not generate")));
    }
    Ok(FamilyInstance {
        family,
        params,
        r,
        lambda,
        graph,
        source: SourceGroup::Dihedral { group, connection_set, alpha, beta },
        expected,
    })
}

/// Root `r` of the cyclotomic quartic mod `m`: the override if valid, else the smallest.
fn choose_r(family: Family, m: u64, r: Option<u64>) -> Result<u64, ConstructError> {
    let roots = solve_eq1(m)?;
    if roots.is_empty() {
        return Err(side(family, "x^4+x^3+x^2+x+1 = 0 to have a root mod m"));
    }
    match r {
        None => Ok(roots[0].value()),
        Some(r) if roots.iter().any(|x| x.value() == r % m) => Ok(r % m),
        Some(r) => Err(side(family, format!("r = {r} to be a root of x^4+x^3+x^2+x+1 mod {m}"))),
    }
}

/// `1 + x + ... + x^(k-1)` mod `n`.
fn geometric(x: u64, k: u32, n: u64) -> i128 {
    let mut acc = 0i128;
    let mut pw = 1i128;
    for _ in 0..k {
        acc = (acc + pw).rem_euclid(n as i128);
        pw = (pw * x as i128).rem_euclid(n as i128);
    }
    acc
}

fn build_cd(params: Params, r: Option<u64>, expected: Expected) -> Result<FamilyInstance, ConstructError> {
    let m = params.m;
    if m <= 1 {
        return Err(side(Family::Cd, "m > 1"));
    }
    let r = choose_r(Family::Cd, m, r)?;
    let g = GeneralizedDihedral::dihedral(m);
    // a^k b = (k, 1)
    let s: Vec<GDihElement> = (0..5).map(|k| g.times_h(&[geometric(r, k, m)])).collect();
    // a -> a^r, b -> ab
    let alpha = DihAutomorphism {
        linear: AbelianAut::from_images(g.base(), vec![vec![r % m]])?,
        h_image: vec![1 % m],
    };
    finish_dihedral(Family::Cd, params, Some(r), None, g, s, Some(alpha), None, expected)
}

struct Zn(u64);

impl Zn {
    fn r(&self, x: i128) -> i128 {
        x.rem_euclid(self.0 as i128)
    }

    fn inv(&self, x: i128) -> Result<i128, ConstructError> {
        let v = reduce(x, self.0);
        inverse_mod(v, self.0)
            .map(|i| i as i128)
            .ok_or(ConstructError::Arith(crate::modarith::ModArithError::NotInvertible { value: v, modulus: self.0 }))
    }

    fn pow(&self, x: i128, k: u32) -> i128 {
        (0..k).fold(self.r(1), |acc, _| self.r(acc * self.r(x)))
    }

    fn poly(&self, x: i128, coeffs: &[i128]) -> i128 {
        // constant term first
        coeffs.iter().rev().fold(0, |acc, &c| self.r(acc * x + c))
    }
}

fn build_cgd(
    family: Family,
    params: Params,
    r: Option<u64>,
    lambda: Option<u64>,
    expected: Expected,
) -> Result<FamilyInstance, ConstructError> {
    let index = family.cgd_index().expect("cgd family");
    let Params { m, p, e } = params;
    if m == 0 {
        return Err(side(family, "m >= 1"));
    }
    if !is_prime(p) {
        return Err(side(family, "p prime"));
    }
    if index <= 3 && e < 2 {
        return Err(side(family, "e >= 2"));
    }
    if gcd(m, p) != 1 {
        return Err(side(family, "(m, p) = 1"));
    }
    let q = p.checked_pow(e).filter(|&q| q <= 1 << 31).ok_or_else(|| side(family, "p^e within range"))?;
    match index {
        1..=3 if (p - 1) % 5 != 0 => return Err(side(family, "5 | (p - 1)")),
        4 if p != 5 && (p + 1) % 5 != 0 && (p - 1) % 5 != 0 => {
            return Err(side(family, "p = 5 or 5 | (p + 1) or 5 | (p - 1)"))
        }
        5 if (p - 1) % 5 != 0 => return Err(side(family, "5 | (p - 1)")),
        _ => {}
    }
    let r = choose_r(family, m, r)?;
    let lam = choose_lambda(family, index, p, q, lambda)?;

    let g = GeneralizedDihedral::new(AbelianGroup::new(&[m, q, p])?);
    let (zq, zp) = (Zn(q), Zn(p));
    let l = lam as i128;
    // a-exponents 0, 1, r+1, r^2+r+1, r^3+r^2+r+1 of the five elements h a^x ...
    let ax: Vec<i128> = (0..5).map(|k| geometric(r, k, m)).collect();
    let (bx, cx): (Vec<i128>, Vec<i128>);
    let (b_img, c_img): (Vec<i128>, Vec<i128>);
    let mut beta = None;
    match index {
        1..=3 => {
            bx = (0..5).map(|k| geometric(lam, k, q)).collect();
            let (x, y) = match index {
                1 => (zq.poly(l, &[1, 1, 0, 0, 1]), 1),
                2 => (zq.poly(l, &[1, 1, 0, 1]), l),
                _ => (zq.poly(l, &[1, 1, 1]), zq.pow(l, 2)),
            };
            cx = vec![0, 0, 1, zp.r(x), zp.r(y)];
            b_img = vec![0, l, 1];
            c_img = vec![0, 0, zp.r(zq.pow(l, 5 - index as u32))];
        }
        4 => {
            let half = zp.inv(2)?;
            let k = zp.r(half * (1 + l));
            bx = vec![0, 1, 0, -k, -k];
            cx = vec![0, 0, 1, k, 1];
            b_img = vec![0, -1, 1];
            c_img = vec![0, zp.r(-half * (3 + l)), k];
            if m == 1 || m == 5 {
                beta = Some(DihAutomorphism {
                    linear: AbelianAut::from_images(
                        g.base(),
                        vec![g.base().element(&[-1, 0, 0]), g.base().element(&[0, -k, 1]), g.base().element(&[0, -k, k])],
                    )?,
                    h_image: g.base().zero(),
                });
            }
        }
        _ => {
            let (half, eighth) = (zp.inv(2)?, zp.inv(8)?);
            let l3 = zp.pow(l, 3);
            let l2 = zp.pow(l, 2);
            bx = vec![0, 1, 0, zp.r(eighth * (l3 - l2 + 7 * l + 1)), zp.r(-eighth * (l3 + l2 + 7 * l - 1))];
            cx = vec![0, 0, 1, zp.r(half * (l + 1)), zp.r(eighth * (l3 + l2 + 11 * l + 3))];
            b_img = vec![0, -1, 1];
            c_img = vec![0, zp.r(eighth * (l3 - l2 + 7 * l - 7)), zp.r(half * (l + 1))];
        }
    }
    let s: Vec<GDihElement> = (0..5)
        .map(|k| {
            g.h_times(&[ax[k], zq.r(bx[k]), zp.r(cx[k])])
        })
        .collect();
    let alpha = DihAutomorphism {
        linear: AbelianAut::from_images(
            g.base(),
            vec![g.base().element(&[r as i128, 0, 0]), g.base().element(&b_img), g.base().element(&c_img)],
        )?,
        // h -> hab = (-(a + b), 1)
        h_image: g.base().element(&[-1, -1, 0]),
    };
    finish_dihedral(family, params, Some(r), Some(lam), g, s, Some(alpha), beta, expected)
}

fn choose_lambda(family: Family, index: u8, p: u64, q: u64, lambda: Option<u64>) -> Result<u64, ConstructError> {
    match index {
        1..=3 => {
            let canonical = order5_unit(q)?.value();
            match lambda {
                None => Ok(canonical),
                Some(l) if crate::modarith::multiplicative_order(l % q, q) == Some(5) => Ok(l % q),
                Some(l) => Err(side(family, format!("lambda = {l} to have multiplicative order 5 mod {q}"))),
            }
        }
        4 => {
            let roots: Vec<u64> = if p == 5 {
                vec![0]
            } else {
                sqrt_mod(Residue::new(5, p)?, p)?.into_iter().map(Residue::value).collect()
            };
            if roots.is_empty() {
                return Err(side(family, "5 to be a square mod p"));
            }
            match lambda {
                None => Ok(roots[0]),
                Some(l) if roots.contains(&(l % p)) => Ok(l % p),
                Some(l) if p == 5 => Err(side(family, format!("lambda = 0 when p = 5 (got {l})"))),
                Some(l) => Err(side(family, format!("lambda = {l} to satisfy lambda^2 = 5 mod {p}"))),
            }
        }
        _ => {
            let roots: Vec<u64> = poly_roots(&ModPoly::quartic_10_5(p)?)?.into_iter().map(Residue::value).collect();
            if roots.is_empty() {
                return Err(side(family, "x^4+10x^2+5 = 0 to have a root mod p"));
            }
            match lambda {
                None => Ok(roots[0]),
                Some(l) if roots.contains(&(l % p)) => Ok(l % p),
                Some(l) => Err(side(family, format!("lambda = {l} to be a root of x^4+10x^2+5 mod {p}"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: u64, p: u64, e: u32) -> Params {
        Params { m, p, e }
    }

    #[test]
    fn sporadic_and_literal_orders() {
        for (f, n) in [
            (Family::K6, 6),
            (Family::K55, 10),
            (Family::K66Minus6K2, 12),
            (Family::Icosahedron, 12),
            (Family::I12Double, 24),
            (Family::G48, 48),
            (Family::G60, 60),
            (Family::G120, 120),
            (Family::Cgd125, 250),
        ] {
            let inst = family(f, Params::default()).unwrap();
            assert_eq!(inst.graph.vertex_count(), n, "{f}");
            assert_eq!(inst.graph.regular_valency(), Some(5), "{f}");
            assert!(inst.graph.is_connected());
        }
    }

    #[test]
    fn parameterised_orders() {
        assert_eq!(family(Family::Cd, p(11, 0, 0)).unwrap().graph.vertex_count(), 22);
        assert_eq!(family(Family::Cd, p(31, 0, 0)).unwrap().graph.vertex_count(), 62);
        assert_eq!(family(Family::Cd, p(55, 0, 0)).unwrap().graph.vertex_count(), 110);
        let inst = family(Family::Cgd4, p(1, 5, 1)).unwrap();
        assert_eq!(inst.graph.vertex_count(), 50);
        assert_eq!(inst.expected.aut_order, 4000);
        assert_eq!(inst.lambda, Some(0));
        let inst = family(Family::Cgd4, p(1, 11, 1)).unwrap();
        assert_eq!(inst.graph.vertex_count(), 242);
        assert_eq!(inst.lambda, Some(4));
        let inst = family(Family::Cgd5, p(1, 11, 1)).unwrap();
        assert_eq!(inst.graph.vertex_count(), 242);
        assert_eq!(inst.lambda, Some(3));
        let inst = family(Family::Cgd1, p(1, 11, 2)).unwrap();
        assert_eq!(inst.graph.vertex_count(), 2662);
        assert_eq!(inst.expected.aut_order, 13310);
        assert_eq!(inst.lambda, Some(3));
        // 5 | (p + 1) branch
        assert_eq!(family(Family::Cgd4, p(1, 19, 1)).unwrap().graph.vertex_count(), 722);
    }

    #[test]
    fn side_conditions_are_named() {
        let msg = |f, q: Params| family(f, q).unwrap_err().to_string();
        assert!(msg(Family::Cgd1, p(1, 7, 2)).contains("5 | (p - 1)"));
        assert!(msg(Family::Cgd1, p(1, 11, 1)).contains("e >= 2"));
        assert!(msg(Family::Cgd5, p(1, 11, 2)).contains("e = 1"));
        assert!(msg(Family::Cgd4, p(1, 7, 1)).contains("p = 5 or"));
        assert!(msg(Family::Cgd5, p(11, 11, 1)).contains("(m, p) = 1"));
        assert!(msg(Family::Cgd5, p(3, 11, 1)).contains("root mod m"));
        assert!(msg(Family::Cd, p(7, 0, 0)).contains("root mod m"));
        assert!(msg(Family::Cd, p(1, 0, 0)).contains("m > 1"));
        assert!(msg(Family::Cgd5, p(1, 12, 1)).contains("p prime"));
        assert!(family_with_roots(Family::Cd, p(11, 0, 0), Some(2), None).is_err());
        assert!(family_with_roots(Family::Cgd4, p(1, 11, 1), None, Some(3)).is_err());
    }

    #[test]
    fn names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("cgd9".parse::<Family>().is_err());
        assert_eq!("CGD_4".parse::<Family>().unwrap(), Family::Cgd4);
    }

    #[test]
    fn cd5_is_k55() {
        let cd5 = family(Family::Cd, p(5, 0, 0)).unwrap();
        assert_eq!(cd5.graph.edge_count(), 25);
        let colour = cd5.graph.is_bipartite().unwrap();
        // rotations on one side, reflections on the other
        assert!(colour[..5].iter().all(|&c| c == 0) && colour[5..].iter().all(|&c| c == 1));
    }

    #[test]
    fn alpha_permutes_connection_set_cyclically() {
        for (f, q) in [
            (Family::Cd, p(11, 0, 0)),
            (Family::Cd, p(31, 0, 0)),
            (Family::Cgd1, p(1, 11, 2)),
            (Family::Cgd2, p(1, 11, 2)),
            (Family::Cgd3, p(1, 11, 2)),
            (Family::Cgd4, p(1, 5, 1)),
            (Family::Cgd4, p(1, 11, 1)),
            (Family::Cgd5, p(1, 11, 1)),
            (Family::Cgd5, p(1, 31, 1)),
            (Family::Cgd5, p(1, 41, 1)),
            (Family::Cgd1, p(31, 11, 2)),
            (Family::Cgd5, p(11, 31, 1)),
        ] {
            let inst = family(f, q).unwrap();
            let SourceGroup::Dihedral { group, connection_set, alpha: Some(alpha), .. } = &inst.source else {
                panic!()
            };
            let mut x = connection_set[0].clone();
            let mut seen = vec![x.clone()];
            for _ in 0..4 {
                x = alpha.apply(group, &x);
                assert!(connection_set.contains(&x), "{}: alpha leaves T", inst.label());
                seen.push(x.clone());
            }
            assert_eq!(alpha.apply(group, &x), connection_set[0]);
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), 5);
        }
    }
}
