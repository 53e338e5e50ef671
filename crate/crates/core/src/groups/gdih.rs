use super::{AbelianGroup, FiniteGroup, GroupError};

/// `u * h^flip` in `Dih(H)`, where `h` inverts every element of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GDihElement {
    pub vector: Vec<u64>,
    pub flip: bool,
}

/// The generalized dihedral group `Dih(H) = H ⋊ <h>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedDihedral {
    base: AbelianGroup,
}

impl GeneralizedDihedral {
    pub fn new(base: AbelianGroup) -> Self {
        GeneralizedDihedral { base }
    }

    /// `D_n`, the dihedral group of order `2n`.
    pub fn dihedral(n: u64) -> Self {
        GeneralizedDihedral { base: AbelianGroup::cyclic(n) }
    }

    pub fn base(&self) -> &AbelianGroup {
        &self.base
    }

    /// `u` for signed exponents `u`.
    pub fn rotation(&self, exps: &[i128]) -> GDihElement {
        GDihElement { vector: self.base.element(exps), flip: false }
    }

    /// `h * u`, written as the element `(-u, 1)`.
    pub fn h_times(&self, exps: &[i128]) -> GDihElement {
        let u = self.base.element(exps);
        GDihElement { vector: self.base.neg(&u), flip: true }
    }

    /// `u * h`, the element `(u, 1)`.
    pub fn times_h(&self, exps: &[i128]) -> GDihElement {
        GDihElement { vector: self.base.element(exps), flip: true }
    }

    pub fn h(&self) -> GDihElement {
        GDihElement { vector: self.base.zero(), flip: true }
    }

    pub fn try_multiply(&self, x: &GDihElement, y: &GDihElement) -> Result<GDihElement, GroupError> {
        for v in [&x.vector, &y.vector] {
            if !self.base.contains(v) {
                return Err(GroupError::MismatchedModuli(
                    self.base.moduli().to_vec(),
                    vec![v.len() as u64],
                ));
            }
        }
        Ok(self.multiply(x, y))
    }
}

impl FiniteGroup for GeneralizedDihedral {
    type Elem = GDihElement;

    fn order(&self) -> usize {
        2 * self.base.order()
    }

    fn identity(&self) -> GDihElement {
        GDihElement { vector: self.base.zero(), flip: false }
    }

    fn multiply(&self, x: &GDihElement, y: &GDihElement) -> GDihElement {
        let v = if x.flip { self.base.neg(&y.vector) } else { y.vector.clone() };
        GDihElement { vector: self.base.add(&x.vector, &v), flip: x.flip ^ y.flip }
    }

    fn inverse(&self, x: &GDihElement) -> GDihElement {
        if x.flip {
            x.clone()
        } else {
            GDihElement { vector: self.base.neg(&x.vector), flip: false }
        }
    }

    fn rank(&self, x: &GDihElement) -> usize {
        usize::from(x.flip) * self.base.order() + self.base.rank(&x.vector)
    }

    fn unrank(&self, index: usize) -> GDihElement {
        let n = self.base.order();
        GDihElement { vector: self.base.unrank(index % n), flip: index >= n }
    }

    fn generators(&self) -> Vec<GDihElement> {
        let mut gens: Vec<GDihElement> = self
            .base
            .generators()
            .into_iter()
            .map(|vector| GDihElement { vector, flip: false })
            .collect();
        gens.push(self.h());
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group() -> GeneralizedDihedral {
        GeneralizedDihedral::new(AbelianGroup::new(&[5, 25, 5]).unwrap())
    }

    #[test]
    fn defining_relations() {
        let g = group();
        let h = g.h();
        let e = g.identity();
        assert_eq!(g.multiply(&h, &h), e);
        let a = g.rotation(&[1, 0, 0]);
        assert_eq!(g.multiply(&g.times_h(&[1, 0, 0]), &a), h);
        let v = g.rotation(&[2, 7, 3]);
        assert_eq!(g.multiply(&g.multiply(&h, &v), &h), g.inverse(&v));
        assert_eq!(g.h_times(&[1, 1, 0]), g.multiply(&h, &g.rotation(&[1, 1, 0])));
    }

    #[test]
    fn rank_puts_flip_first() {
        let g = GeneralizedDihedral::dihedral(5);
        assert_eq!(g.rank(&g.identity()), 0);
        assert_eq!(g.rank(&g.h()), 5);
        for i in 0..g.order() {
            assert_eq!(g.rank(&g.unrank(i)), i);
        }
    }

    #[test]
    fn mismatched_moduli() {
        let g = group();
        let bad = GDihElement { vector: vec![0, 0], flip: false };
        assert!(g.try_multiply(&g.h(), &bad).is_err());
    }

    #[test]
    fn associativity_and_inverses() {
        let g = GeneralizedDihedral::new(AbelianGroup::new(&[3, 4]).unwrap());
        let els = g.elements();
        for x in &els {
            assert_eq!(g.multiply(x, &g.inverse(x)), g.identity());
            for y in &els {
                for z in els.iter().step_by(5) {
                    assert_eq!(
                        g.multiply(&g.multiply(x, y), z),
                        g.multiply(x, &g.multiply(y, z))
                    );
                }
            }
        }
        assert_eq!(g.generated_order(&g.generators()), 24);
    }
}
