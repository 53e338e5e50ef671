//! Permutations of `{0, ..., n-1}`.
//!
//! Products are read left to right: `p.then(q)` maps `x` to `q(p(x))`, so a
//! group acts on points from the right and `x^(pq) = (x^p)^q`.

use std::fmt;

use super::GroupError;
use crate::modarith::gcd;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(GroupError::InvalidPerm(format!("image {x} out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::InvalidPerm(format!("image {x} repeated")));
            }
        }
        Ok(Perm { images: images.into_iter().map(|x| x as u32).collect() })
    }

    /// Build from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || std::mem::replace(&mut moved[x], true) {
                    return Err(GroupError::InvalidPerm(format!("bad cycle point {x}")));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn try_then(&self, other: &Perm) -> Result<Perm, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Perm { images: out }
    }

    pub fn pow(&self, mut exp: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let l = c.len() as u64;
            acc / gcd(acc, l) * l
        })
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i == x as usize).count()
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        (0..self.images.len()).all(|x| {
            other.images[self.images[x] as usize] == self.images[other.images[x] as usize]
        })
    }

    /// Space-separated images on one line.
    pub fn to_line(&self) -> String {
        self.images.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn parse_line(line: &str) -> Result<Perm, GroupError> {
        let images = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| GroupError::InvalidPerm(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Perm::from_images(images)
    }
}

/// One permutation per line; blank lines and `#` comments are skipped.
pub fn parse_perm_list(text: &str) -> Result<Vec<Perm>, GroupError> {
    let perms: Vec<Perm> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(Perm::parse_line)
        .collect::<Result<_, _>>()?;
    if let Some(first) = perms.first() {
        if let Some(bad) = perms.iter().find(|p| p.degree() != first.degree()) {
            return Err(GroupError::DegreeMismatch(first.degree(), bad.degree()));
        }
    }
    Ok(perms)
}

pub fn format_perm_list(perms: &[Perm]) -> String {
    perms.iter().map(|p| p.to_line() + "\n").collect()
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    #[test]
    fn composition_order() {
        let p = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let q = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -> 1 -> 2
        assert_eq!(p.then(&q).apply(0), 2);
        assert_eq!(p.then(&q).order(), 3);
        assert!(!p.commutes_with(&q));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
        assert!(Perm::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
        assert!(Perm::identity(2).try_then(&Perm::identity(3)).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let perms = vec![
            Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(5, &[&[3, 4]]).unwrap(),
        ];
        let text = format_perm_list(&perms);
        assert_eq!(text, "1 2 0 3 4\n0 1 2 4 3\n");
        assert_eq!(parse_perm_list(&text).unwrap(), perms);
        assert!(parse_perm_list("0 1\n0 1 2\n").is_err());
    }

    proptest! {
        #[test]
        fn group_laws(p in perm_strategy(9), q in perm_strategy(9), r in perm_strategy(9)) {
            prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert_eq!(q.conjugate_by(&p), p.inverse().then(&q).then(&p));
            prop_assert!(p.pow(p.order()).is_identity());
            prop_assert_eq!(p.pow(3), p.then(&p).then(&p));
        }
    }
}
