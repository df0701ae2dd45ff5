//! Small finite groups as Cayley tables, with twisted conjugacy, centralizers
//! and automorphism helpers. Sizes up to a few thousand elements.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    ClosureBound(usize),
    #[error("generator images do not define an automorphism")]
    NotAnAutomorphism,
}

/// Element 0 is always the identity; elements are numbered in BFS order.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Closure of `gens` under `mul`, plus the concrete elements in index order.
    pub fn from_generators<T, F>(identity: T, gens: &[T], mul: F, bound: usize) -> Result<(Self, Vec<T>), GroupError>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut words = vec![Vec::new()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (g, s) in gens.iter().enumerate() {
                let next = mul(&elements[i], s);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= bound {
                    return Err(GroupError::ClosureBound(bound));
                }
                let mut w = words[i].clone();
                w.push(g);
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
                words.push(w);
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index[&mul(&elements[i], &elements[j])] as u32;
            }
        }
        let mut inverse = vec![0; n];
        for i in 0..n {
            inverse[i] = (0..n).find(|&j| table[i * n + j] == 0).expect("group has inverses");
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok((FiniteGroup { n, table, inverse, generators, words }, elements))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Generator word of element `a`, as indices into `generators()`.
    pub fn word(&self, a: usize) -> &[usize] {
        &self.words[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn identity_map(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// Orbits of `x ↦ g·x·σ(g)⁻¹`, each sorted, listed by smallest member.
    pub fn twisted_classes(&self, sigma: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in &self.generators {
                    let y = self.mul(self.mul(g, x), self.inv(sigma[g]));
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        self.twisted_classes(&self.identity_map())
    }

    /// `class_id[x]` for a partition of the group.
    pub fn class_ids(&self, classes: &[Vec<usize>]) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.n];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                ids[x] = k;
            }
        }
        ids
    }

    pub fn centralizer_order(&self, a: usize) -> usize {
        (0..self.n).filter(|&g| self.mul(g, a) == self.mul(a, g)).count()
    }

    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        if map.len() != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &m in map {
            if m >= self.n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        (0..self.n).all(|a| (0..self.n).all(|b| map[self.mul(a, b)] == self.mul(map[a], map[b])))
    }

    /// The automorphism sending generator `k` to `images[k]`, if one exists.
    pub fn extend_generator_images(&self, images: &[usize]) -> Result<Vec<usize>, GroupError> {
        let mut map = vec![usize::MAX; self.n];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                let image = self.mul(map[x], images[k]);
                if map[y] == usize::MAX {
                    map[y] = image;
                    queue.push_back(y);
                } else if map[y] != image {
                    return Err(GroupError::NotAnAutomorphism);
                }
            }
        }
        let mut hit = vec![false; self.n];
        for &m in &map {
            if hit[m] {
                return Err(GroupError::NotAnAutomorphism);
            }
            hit[m] = true;
        }
        Ok(map)
    }

    pub fn compose(&self, outer: &[usize], inner: &[usize]) -> Vec<usize> {
        inner.iter().map(|&x| outer[x]).collect()
    }

    pub fn inner_automorphism(&self, g: usize) -> Vec<usize> {
        let gi = self.inv(g);
        (0..self.n).map(|x| self.mul(self.mul(g, x), gi)).collect()
    }

    pub fn is_inner(&self, map: &[usize]) -> bool {
        (0..self.n).any(|g| {
            let gi = self.inv(g);
            self.generators.iter().all(|&s| map[s] == self.mul(self.mul(g, s), gi))
        })
    }

    pub fn fixed_points(&self, map: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&x| map[x] == x).collect()
    }

    /// The subgroup on `members`, which must be closed under multiplication.
    pub fn subgroup(&self, members: &[usize]) -> FiniteGroup {
        let (sub, _) = FiniteGroup::from_generators(0usize, members, |a, b| self.mul(*a, *b), self.n + 1)
            .expect("subgroup of a finite group is finite");
        sub
    }
}
