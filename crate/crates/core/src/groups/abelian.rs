use super::{FiniteGroup, GroupError};
use crate::modarith::{factorize, gcd, inverse_mod};

/// Largest group order for which [`abelian_automorphisms`] enumerates.
pub const AUT_ENUMERATION_CAP: usize = 10_000;

/// `Z_{d_1} x ... x Z_{d_k}`; elements are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(moduli: &[u64]) -> Result<Self, GroupError> {
        if moduli.contains(&0) {
            return Err(GroupError::Invalid(format!("zero modulus in {moduli:?}")));
        }
        Ok(AbelianGroup { moduli: moduli.to_vec() })
    }

    pub fn cyclic(n: u64) -> Self {
        AbelianGroup { moduli: vec![n.max(1)] }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank_len(&self) -> usize {
        self.moduli.len()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.moduli.len()]
    }

    /// Build an element from signed exponents, reducing each mod its modulus.
    pub fn element(&self, exps: &[i128]) -> Vec<u64> {
        assert_eq!(exps.len(), self.moduli.len(), "exponent vector length");
        exps.iter().zip(&self.moduli).map(|(&x, &d)| x.rem_euclid(d as i128) as u64).collect()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        x.len() == self.moduli.len() && x.iter().zip(&self.moduli).all(|(a, d)| a < d)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).zip(&self.moduli).map(|((a, b), d)| (a + b) % d).collect()
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter().zip(&self.moduli).map(|(a, d)| (d - a) % d).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &[u64], k: i128) -> Vec<u64> {
        x.iter()
            .zip(&self.moduli)
            .map(|(&a, &d)| ((a as i128 * k.rem_euclid(d as i128)) % d as i128) as u64)
            .collect()
    }

    pub fn additive_order(&self, x: &[u64]) -> u64 {
        x.iter().zip(&self.moduli).fold(1, |acc, (&a, &d)| {
            let o = d / gcd(a, d);
            acc / gcd(acc, o) * o
        })
    }

    pub fn basis(&self) -> Vec<Vec<u64>> {
        (0..self.moduli.len())
            .map(|i| {
                let mut e = self.zero();
                if self.moduli[i] > 1 {
                    e[i] = 1;
                }
                e
            })
            .collect()
    }
}

impl FiniteGroup for AbelianGroup {
    type Elem = Vec<u64>;

    fn order(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    fn identity(&self) -> Vec<u64> {
        self.zero()
    }

    fn multiply(&self, x: &Vec<u64>, y: &Vec<u64>) -> Vec<u64> {
        self.add(x, y)
    }

    fn inverse(&self, x: &Vec<u64>) -> Vec<u64> {
        self.neg(x)
    }

    /// Mixed radix, first component most significant.
    fn rank(&self, x: &Vec<u64>) -> usize {
        x.iter().zip(&self.moduli).fold(0usize, |acc, (&a, &d)| acc * d as usize + a as usize)
    }

    fn unrank(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &d) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % d as usize) as u64;
            index /= d as usize;
        }
        out
    }

    fn generators(&self) -> Vec<Vec<u64>> {
        self.basis().into_iter().filter(|e| e.iter().any(|&a| a != 0)).collect()
    }

    fn element_order(&self, x: &Vec<u64>) -> usize {
        self.additive_order(x) as usize
    }
}

/// An automorphism of an [`AbelianGroup`], stored as the images of the
/// standard basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianAut {
    images: Vec<Vec<u64>>,
}

impl AbelianAut {
    /// From basis images; checks the map is well defined and bijective.
    pub fn from_images(group: &AbelianGroup, images: Vec<Vec<u64>>) -> Result<Self, GroupError> {
        if images.len() != group.rank_len() || !images.iter().all(|x| group.contains(x)) {
            return Err(GroupError::Invalid("basis images do not lie in the group".into()));
        }
        for (img, &d) in images.iter().zip(group.moduli()) {
            if d % group.additive_order(img) != 0 {
                return Err(GroupError::Invalid(format!(
                    "image {img:?} has order not dividing {d}"
                )));
            }
        }
        let aut = AbelianAut { images };
        if group.order() <= 1 << 20 {
            let mut seen = vec![false; group.order()];
            for x in group.elements() {
                let r = group.rank(&aut.apply(group, &x));
                if seen[r] {
                    return Err(GroupError::Invalid("map is not injective".into()));
                }
                seen[r] = true;
            }
        }
        Ok(aut)
    }

    pub fn identity(group: &AbelianGroup) -> Self {
        AbelianAut { images: group.basis() }
    }

    pub fn images(&self) -> &[Vec<u64>] {
        &self.images
    }

    pub fn apply(&self, group: &AbelianGroup, x: &[u64]) -> Vec<u64> {
        let mut acc = group.zero();
        for (&c, img) in x.iter().zip(&self.images) {
            if c != 0 {
                acc = group.add(&acc, &group.scale(img, c as i128));
            }
        }
        acc
    }

    /// `self` followed by `other`.
    pub fn then(&self, group: &AbelianGroup, other: &AbelianAut) -> AbelianAut {
        AbelianAut { images: self.images.iter().map(|x| other.apply(group, x)).collect() }
    }
}

struct PrimaryComponent {
    prime: u64,
    // (coordinate index, local order p^k, generator vector in H)
    factors: Vec<(usize, u64, Vec<u64>)>,
}

fn primary_components(group: &AbelianGroup) -> Vec<PrimaryComponent> {
    let mut primes: Vec<u64> =
        group.moduli().iter().flat_map(|&d| factorize(d).into_iter().map(|(p, _)| p)).collect();
    primes.sort_unstable();
    primes.dedup();
    primes
        .into_iter()
        .map(|p| {
            let factors = group
                .moduli()
                .iter()
                .enumerate()
                .filter_map(|(i, &d)| {
                    let mut pk = 1;
                    while d % (pk * p) == 0 {
                        pk *= p;
                    }
                    (pk > 1).then(|| {
                        let mut g = group.zero();
                        g[i] = d / pk;
                        (i, pk, g)
                    })
                })
                .collect();
            PrimaryComponent { prime: p, factors }
        })
        .collect()
}

/// Elements of the `p`-primary component whose order divides `bound`.
fn component_elements(group: &AbelianGroup, comp: &PrimaryComponent, bound: u64) -> Vec<Vec<u64>> {
    let mut out = vec![group.zero()];
    for (_, pk, g) in &comp.factors {
        let mut next = Vec::with_capacity(out.len() * *pk as usize);
        for x in &out {
            for c in 0..*pk {
                next.push(group.add(x, &group.scale(g, c as i128)));
            }
        }
        out = next;
    }
    out.retain(|x| bound.is_multiple_of(group.additive_order(x)));
    out
}

fn det_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_multiple_of(p)) else {
            return 0;
        };
        if piv != col {
            m.swap(piv, col);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        let inv = inverse_mod(m[col][col], p).expect("pivot is a unit");
        for r in col + 1..n {
            let f = m[r][col] * inv % p;
            for c in col..n {
                m[r][c] = (m[r][c] + p * p - f * m[col][c] % p) % p;
            }
        }
    }
    det
}

/// Automorphisms of one primary component, as images of its generators.
fn component_automorphisms(group: &AbelianGroup, comp: &PrimaryComponent) -> Vec<Vec<Vec<u64>>> {
    let p = comp.prime;
    let candidates: Vec<Vec<Vec<u64>>> =
        comp.factors.iter().map(|(_, pk, _)| component_elements(group, comp, *pk)).collect();
    // Coordinates of a component element modulo the Frattini subgroup pH.
    let frattini = |x: &[u64]| -> Vec<u64> {
        comp.factors.iter().map(|(i, _, g)| (x[*i] / g[*i]) % p).collect()
    };
    let mut out = Vec::new();
    let mut choice = vec![0usize; candidates.len()];
    loop {
        let images: Vec<Vec<u64>> =
            choice.iter().zip(&candidates).map(|(&c, cands)| cands[c].clone()).collect();
        let matrix: Vec<Vec<u64>> = images.iter().map(|x| frattini(x)).collect();
        if det_mod_p(matrix, p) != 0 {
            out.push(images);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// All automorphisms of `group`, assembled from its coprime primary components.
pub fn abelian_automorphisms(group: &AbelianGroup) -> Result<Vec<AbelianAut>, GroupError> {
    if group.order() > AUT_ENUMERATION_CAP {
        return Err(GroupError::TooLarge { order: group.order(), cap: AUT_ENUMERATION_CAP });
    }
    let comps = primary_components(group);
    let per_comp: Vec<Vec<Vec<Vec<u64>>>> =
        comps.iter().map(|c| component_automorphisms(group, c)).collect();

    // Basis vector e_i splits as a sum over components of t * (component generator).
    let k = group.rank_len();
    let mut split: Vec<Vec<(usize, usize, u64)>> = vec![Vec::new(); k];
    for (ci, comp) in comps.iter().enumerate() {
        for (fi, (i, pk, _)) in comp.factors.iter().enumerate() {
            let d = group.moduli()[*i];
            let cofactor = d / pk;
            // idempotent: 1 mod pk, 0 mod cofactor
            let idem = cofactor as u128 * inverse_mod(cofactor % pk, *pk).unwrap_or(0) as u128;
            let t = (idem / cofactor as u128) as u64 % pk;
            split[*i].push((ci, fi, t));
        }
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; comps.len()];
    loop {
        let images: Vec<Vec<u64>> = (0..k)
            .map(|i| {
                split[i].iter().fold(group.zero(), |acc, &(ci, fi, t)| {
                    let img = &per_comp[ci][choice[ci]][fi];
                    group.add(&acc, &group.scale(img, t as i128))
                })
            })
            .collect();
        out.push(AbelianAut { images });
        let mut j = 0;
        loop {
            if j == choice.len() {
                return Ok(out);
            }
            choice[j] += 1;
            if choice[j] < per_comp[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Exhaustive oracle: every assignment of basis images with compatible
    /// orders, kept when the induced map is a bijection.
    fn brute_force_aut_count(group: &AbelianGroup) -> usize {
        let elems = group.elements();
        let per_basis: Vec<Vec<Vec<u64>>> = group
            .moduli()
            .iter()
            .map(|&d| elems.iter().filter(|x| d % group.additive_order(x) == 0).cloned().collect())
            .collect();
        let mut count = 0;
        let mut choice = vec![0usize; per_basis.len()];
        'outer: loop {
            let images: Vec<Vec<u64>> =
                choice.iter().zip(&per_basis).map(|(&c, v)| v[c].clone()).collect();
            let aut = AbelianAut { images };
            let image_set: HashSet<Vec<u64>> = elems.iter().map(|x| aut.apply(group, x)).collect();
            if image_set.len() == elems.len() {
                count += 1;
            }
            let mut j = 0;
            loop {
                if j == choice.len() {
                    break 'outer;
                }
                choice[j] += 1;
                if choice[j] < per_basis[j].len() {
                    break;
                }
                choice[j] = 0;
                j += 1;
            }
        }
        count
    }

    #[test]
    fn rank_roundtrip() {
        let g = AbelianGroup::new(&[3, 4, 5]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.rank(&g.unrank(i)), i);
        }
        assert_eq!(g.unrank(1), vec![0, 0, 1]);
        assert_eq!(g.unrank(5), vec![0, 1, 0]);
    }

    #[test]
    fn automorphism_counts() {
        let c = |m: &[u64]| abelian_automorphisms(&AbelianGroup::new(m).unwrap()).unwrap().len();
        assert_eq!(c(&[5]), 4);
        assert_eq!(c(&[5, 5]), 480);
        assert_eq!(c(&[4, 2]), 8);
        assert_eq!(c(&[1]), 1);
        assert_eq!(c(&[1, 121, 11]), 11usize.pow(3) * 100);
    }

    #[test]
    fn automorphisms_match_brute_force() {
        for moduli in [
            vec![6],
            vec![4, 2],
            vec![2, 2, 2],
            vec![3, 9],
            vec![10, 5],
            vec![12, 2],
            vec![1, 25, 5],
            vec![11, 5, 3],
            vec![6, 4],
        ] {
            let g = AbelianGroup::new(&moduli).unwrap();
            assert!(g.order() <= 200);
            let fast = abelian_automorphisms(&g).unwrap();
            assert_eq!(fast.len(), brute_force_aut_count(&g), "{moduli:?}");
            let distinct: HashSet<_> = fast.iter().collect();
            assert_eq!(distinct.len(), fast.len());
            for a in &fast {
                AbelianAut::from_images(&g, a.images().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn rejects_non_homomorphism() {
        let g = AbelianGroup::new(&[4, 2]).unwrap();
        assert!(AbelianAut::from_images(&g, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(AbelianAut::from_images(&g, vec![vec![2, 0], vec![0, 1]]).is_err());
        assert!(abelian_automorphisms(&AbelianGroup::new(&[101, 101]).unwrap()).is_err());
    }
}
