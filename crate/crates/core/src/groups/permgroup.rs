//! Permutation groups given by generators, with an optional cached closure.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use super::{FiniteGroup, GroupError, Perm, CLOSURE_CAP};

/// A fully enumerated group: its elements plus a lookup index.
#[derive(Debug, Clone)]
pub struct ElementSet {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl ElementSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &Perm> {
        self.elements.iter()
    }
}

#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    closure: OnceLock<ElementSet>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let closure = OnceLock::new();
        if let Some(c) = self.closure.get() {
            let _ = closure.set(c.clone());
        }
        PermGroup { degree: self.degree, generators: self.generators.clone(), closure }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup { degree, generators, closure: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), closure: OnceLock::new() }
    }

    /// The subgroup formed by `elements`, which must be closed under products.
    /// A small generating set is chosen greedily.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self, GroupError> {
        let set = index_elements(degree, elements)?;
        for x in set.iter() {
            if !set.contains(&x.inverse()) {
                return Err(GroupError::Invalid("element set is not closed under inverses".into()));
            }
        }
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = ElementSet { elements: vec![Perm::identity(degree)], index: HashMap::new() };
        current.index.insert(Perm::identity(degree), 0);
        for x in set.iter() {
            if !current.contains(x) {
                gens.push(x.clone());
                current = closure_of(degree, &gens, set.len())?;
                if let Some(bad) = current.iter().find(|y| !set.contains(y)) {
                    return Err(GroupError::Invalid(format!(
                        "element set is not closed: product {bad:?} missing"
                    )));
                }
            }
        }
        if current.len() != set.len() {
            return Err(GroupError::Invalid("element set is not a group".into()));
        }
        let group = PermGroup::new(degree, gens)?;
        let _ = group.closure.set(set);
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Enumerate all elements by breadth-first closure (cached).
    pub fn close(&self, cap: usize) -> Result<&ElementSet, GroupError> {
        if let Some(c) = self.closure.get() {
            if c.len() > cap {
                return Err(GroupError::CapExceeded { cap, partial: c.len() });
            }
            return Ok(c);
        }
        let set = closure_of(self.degree, &self.generators, cap)?;
        Ok(self.closure.get_or_init(|| set))
    }

    pub fn closure(&self) -> Result<&ElementSet, GroupError> {
        self.close(CLOSURE_CAP)
    }

    pub fn closure_if_cached(&self) -> Option<&ElementSet> {
        self.closure.get()
    }

    pub fn order(&self) -> Result<usize, GroupError> {
        Ok(self.closure()?.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, GroupError> {
        Ok(self.closure()?.contains(p))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            self.generators[i + 1..].iter().all(|h| g.commutes_with(h))
        })
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut out = vec![point];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    /// Orbits in order of their smallest point; each orbit sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = self.orbit(start);
            for &x in &orbit {
                seen[x] = true;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// `K^g = K` for every generator `g` of `self`, checked on generators of
    /// `k` against the closure of `k`.
    pub fn normalizes(&self, k: &PermGroup) -> Result<bool, GroupError> {
        let kset = k.closure()?;
        Ok(self
            .generators
            .iter()
            .all(|g| k.generators.iter().all(|x| kset.contains(&x.conjugate_by(g)))))
    }

    /// Adds generators, dropping any cached closure.
    pub fn with_generators(&self, extra: &[Perm]) -> Result<PermGroup, GroupError> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        PermGroup::new(self.degree, gens)
    }
}

fn index_elements(degree: usize, elements: Vec<Perm>) -> Result<ElementSet, GroupError> {
    let mut index = HashMap::with_capacity(elements.len());
    let mut unique = Vec::with_capacity(elements.len());
    for p in elements {
        if p.degree() != degree {
            return Err(GroupError::DegreeMismatch(degree, p.degree()));
        }
        if !index.contains_key(&p) {
            index.insert(p.clone(), unique.len());
            unique.push(p);
        }
    }
    Ok(ElementSet { elements: unique, index })
}

fn closure_of(degree: usize, gens: &[Perm], cap: usize) -> Result<ElementSet, GroupError> {
    let id = Perm::identity(degree);
    let mut index = HashMap::new();
    index.insert(id.clone(), 0usize);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let y = elements[i].then(g);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap, partial: elements.len() });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    Ok(ElementSet { elements, index })
}

/// A permutation group viewed as an abstract group, elements numbered in
/// lexicographic order of their image lists. Products follow [`Perm::then`].
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl EnumeratedGroup {
    pub fn new(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self, GroupError> {
        let group = PermGroup::new(degree, generators)?;
        let mut elements = group.close(cap)?.elements().to_vec();
        elements.sort();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(EnumeratedGroup { degree, generators: group.generators, elements, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl FiniteGroup for EnumeratedGroup {
    type Elem = Perm;

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn multiply(&self, x: &Perm, y: &Perm) -> Perm {
        x.then(y)
    }

    fn inverse(&self, x: &Perm) -> Perm {
        x.inverse()
    }

    fn rank(&self, x: &Perm) -> usize {
        self.index[x]
    }

    fn unrank(&self, index: usize) -> Perm {
        self.elements[index].clone()
    }

    fn generators(&self) -> Vec<Perm> {
        self.generators.clone()
    }

    fn element_order(&self, x: &Perm) -> usize {
        x.order() as usize
    }
}

/// Every non-identity element is fixed-point-free.
pub fn is_semiregular(group: &PermGroup) -> Result<bool, GroupError> {
    Ok(group.closure()?.iter().all(|p| p.is_identity() || p.fixed_points() == 0))
}

/// `{g in A : K^g = K}`.
pub fn normalizer(a: &PermGroup, k: &PermGroup) -> Result<PermGroup, GroupError> {
    let aset = a.closure()?;
    let kset = k.closure()?;
    if let Some(x) = kset.iter().find(|x| !aset.contains(x)) {
        return Err(GroupError::Invalid(format!("{x:?} lies in K but not in A")));
    }
    let elems = aset
        .iter()
        .filter(|g| k.generators.iter().all(|x| kset.contains(&x.conjugate_by(g))))
        .cloned()
        .collect();
    PermGroup::from_elements(a.degree, elems)
}

/// `{g in A : gk = kg for all k in K}`.
pub fn centralizer(a: &PermGroup, k: &PermGroup) -> Result<PermGroup, GroupError> {
    let aset = a.closure()?;
    k.closure()?;
    let elems = aset
        .iter()
        .filter(|g| k.generators.iter().all(|x| x.commutes_with(g)))
        .cloned()
        .collect();
    PermGroup::from_elements(a.degree, elems)
}

/// `R(x)`: the vertex `y` goes to `y * x`.
pub fn right_multiplication<G: FiniteGroup>(group: &G, x: &G::Elem) -> Perm {
    let images = (0..group.order())
        .map(|i| group.rank(&group.multiply(&group.unrank(i), x)))
        .collect();
    Perm::from_images(images).expect("right multiplication is a bijection")
}

/// The right regular representation on the group's element enumeration.
pub fn right_regular<G: FiniteGroup>(group: &G) -> Result<PermGroup, GroupError> {
    if group.order() > CLOSURE_CAP {
        return Err(GroupError::TooLarge { order: group.order(), cap: CLOSURE_CAP });
    }
    let gens = group.generators().iter().map(|x| right_multiplication(group, x)).collect();
    PermGroup::new(group.order(), gens)
}
