//! Identification of small groups by invariant fingerprints.
//!
//! Only the vertex-stabilizer types that occur for pentavalent arc-transitive
//! graphs, plus `Z_n` and `D_n` for `n <= 100` and `Q8`, are catalogued.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use super::{GroupError, Perm, PermGroup};

/// Fingerprints are computed only for groups up to this order.
pub const FINGERPRINT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<u64, usize>,
    pub abelian: bool,
    pub cyclic: bool,
}

pub fn fingerprint(group: &PermGroup) -> Result<Fingerprint, GroupError> {
    let set = group.close(FINGERPRINT_CAP)?;
    let mut order_histogram = BTreeMap::new();
    for p in set.iter() {
        *order_histogram.entry(p.order()).or_insert(0) += 1;
    }
    let order = set.len();
    let cyclic = order_histogram.contains_key(&(order as u64));
    Ok(Fingerprint { order, order_histogram, abelian: group.is_abelian(), cyclic })
}

/// The catalogue label matching `fp`, if any.
pub fn identify(fp: &Fingerprint) -> Option<&'static str> {
    catalog().iter().find(|(_, f)| f == fp).map(|(name, _)| name.as_str())
}

/// `(label, fingerprint)` for every catalogue entry, built once.
pub fn catalog() -> &'static [(String, Fingerprint)] {
    static CATALOG: OnceLock<Vec<(String, Fingerprint)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        catalog_groups()
            .into_iter()
            .map(|(name, g)| {
                let fp = fingerprint(&g).expect("catalogue groups are small");
                (name, fp)
            })
            .collect()
    })
}

fn cycle(offset: usize, len: usize, degree: usize) -> Perm {
    let pts: Vec<usize> = (offset..offset + len).collect();
    Perm::from_cycles(degree, &[&pts]).unwrap()
}

fn reflection(offset: usize, len: usize, degree: usize) -> Perm {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in 0..len {
        images[offset + i] = offset + (len - i) % len;
    }
    Perm::from_images(images).unwrap()
}

fn affine_z5(mult: usize, offset: usize, degree: usize) -> Perm {
    let mut images: Vec<usize> = (0..degree).collect();
    for x in 0..5 {
        images[offset + x] = offset + (mult * x) % 5;
    }
    Perm::from_images(images).unwrap()
}

fn transposition(a: usize, b: usize, degree: usize) -> Perm {
    Perm::from_cycles(degree, &[&[a, b]]).unwrap()
}

fn three_cycle(a: usize, b: usize, c: usize, degree: usize) -> Perm {
    Perm::from_cycles(degree, &[&[a, b, c]]).unwrap()
}

/// Generators of `A_n` on points `offset..offset+n` (n = 4 or 5).
fn alternating(offset: usize, n: usize, degree: usize) -> Vec<Perm> {
    (2..n).map(|k| three_cycle(offset, offset + 1, offset + k, degree)).collect()
}

fn symmetric(offset: usize, n: usize, degree: usize) -> Vec<Perm> {
    vec![cycle(offset, n, degree), transposition(offset, offset + 1, degree)]
}

// GF(4) = {0, 1, w, w^2} encoded as 0, 1, 2, 3; addition is XOR.
fn gf4_mul(x: usize, y: usize) -> usize {
    const LOG: [usize; 4] = [0, 0, 1, 2];
    if x == 0 || y == 0 {
        0
    } else {
        [1, 2, 3][(LOG[x] + LOG[y]) % 3]
    }
}

/// Point `(x, y)` of `GF(4)^2` is numbered `4x + y`.
fn affine_gf4(f: impl Fn(usize, usize) -> (usize, usize)) -> Perm {
    let images = (0..16)
        .map(|i| {
            let (x, y) = f(i / 4, i % 4);
            4 * x + y
        })
        .collect();
    Perm::from_images(images).unwrap()
}

fn linear_gf4(m: [[usize; 2]; 2]) -> Perm {
    affine_gf4(|x, y| (gf4_mul(m[0][0], x) ^ gf4_mul(m[0][1], y), gf4_mul(m[1][0], x) ^ gf4_mul(m[1][1], y)))
}

fn affine_gf4_groups() -> Vec<(String, PermGroup)> {
    let mut translations = Vec::new();
    for t in [1, 2] {
        translations.push(affine_gf4(move |x, y| (x ^ t, y)));
        translations.push(affine_gf4(move |x, y| (x, y ^ t)));
    }
    let mut sl = translations.clone();
    for t in [1, 2] {
        sl.push(linear_gf4([[1, t], [0, 1]]));
        sl.push(linear_gf4([[1, 0], [t, 1]]));
    }
    let scalar = linear_gf4([[2, 0], [0, 1]]);
    let frobenius = affine_gf4(|x, y| (gf4_mul(x, x), gf4_mul(y, y)));
    let with = |extra: &[Perm]| {
        let mut g = sl.clone();
        g.extend_from_slice(extra);
        PermGroup::new(16, g).unwrap()
    };
    vec![
        ("ASL(2,4)".to_string(), with(&[])),
        ("AGL(2,4)".to_string(), with(std::slice::from_ref(&scalar))),
        ("ASigmaL(2,4)".to_string(), with(std::slice::from_ref(&frobenius))),
        ("AGammaL(2,4)".to_string(), with(&[scalar, frobenius])),
    ]
}

/// Left multiplication on `{1, i, j, k, -1, -i, -j, -k}` numbered `0..8`.
fn quaternion() -> PermGroup {
    let left = |table: [(usize, bool); 4]| {
        let images = (0..8)
            .map(|x| {
                let (unit, neg) = table[x % 4];
                unit + 4 * usize::from(neg != (x >= 4))
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    let i = left([(1, false), (0, true), (3, false), (2, true)]);
    let j = left([(2, false), (3, true), (0, true), (1, false)]);
    PermGroup::new(8, vec![i, j]).unwrap()
}

fn catalog_groups() -> Vec<(String, PermGroup)> {
    let mut out = Vec::new();
    for n in 1..=100 {
        out.push((format!("Z{n}"), PermGroup::new(n, vec![cycle(0, n, n)]).unwrap()));
    }
    // D_1 = Z_2 is already listed.
    for n in 2..=100 {
        let d = if n == 2 { 4 } else { n };
        let gens = if n == 2 {
            vec![transposition(0, 1, 4), transposition(2, 3, 4)]
        } else {
            vec![cycle(0, n, d), reflection(0, n, d)]
        };
        out.push((format!("D{n}"), PermGroup::new(d, gens).unwrap()));
    }
    out.push(("Q8".into(), quaternion()));
    let f20 = |offset: usize, degree: usize| vec![cycle(offset, 5, degree), affine_z5(2, offset, degree)];
    out.push(("F20".into(), PermGroup::new(5, f20(0, 5)).unwrap()));
    let mut g = f20(0, 7);
    g.push(transposition(5, 6, 7));
    out.push(("F20xZ2".into(), PermGroup::new(7, g).unwrap()));
    out.push(("A5".into(), PermGroup::new(5, alternating(0, 5, 5)).unwrap()));
    out.push(("S5".into(), PermGroup::new(5, symmetric(0, 5, 5)).unwrap()));
    let mut g = f20(0, 9);
    g.push(cycle(5, 4, 9));
    out.push(("F20xZ4".into(), PermGroup::new(9, g).unwrap()));
    let mut g = alternating(0, 4, 9);
    g.extend(alternating(4, 5, 9));
    out.push(("A4xA5".into(), PermGroup::new(9, g.clone()).unwrap()));
    let mut s = symmetric(0, 4, 9);
    s.extend(symmetric(4, 5, 9));
    out.push(("S4xS5".into(), PermGroup::new(9, s).unwrap()));
    g.push(transposition(0, 1, 9).then(&transposition(4, 5, 9)));
    out.push(("(A4xA5):Z2".into(), PermGroup::new(9, g).unwrap()));
    out.extend(affine_gf4_groups());
    out
}
