//! Weyl groups of types B₂, G₂, F₄ in their reflection representation on the
//! root lattice, the diagram twist, F-conjugacy classes and torus orders.

mod datum;
mod imat;
mod torus;

pub use datum::RootDatum;
pub use imat::IntMatrix;
pub use torus::{match_fclasses_to_columns, torus_order};

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::exactfield::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("closure exceeded {0} elements; the Cartan matrix is probably malformed")]
    ClosureBound(usize),
    #[error("twisted element is not in the group; the twist matrix is wrong")]
    TwistOutsideGroup,
    #[error("column matching failed: {0}")]
    Matching(String),
}

/// Upper bound for the BFS closure; comfortably above |W(F₄)|.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// A finite reflection group, elements keyed by their integer matrix.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<IntMatrix>,
    words: Vec<Vec<usize>>,
    index: HashMap<IntMatrix, usize>,
    generators: Vec<IntMatrix>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        &self.elements[i]
    }

    /// A generator word for element `i`; `[]` is the identity.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.index.contains_key(m)
    }
}

/// Breadth-first closure of the simple reflections.
pub fn generate_weyl(datum: &RootDatum) -> Result<WeylGroup, WeylError> {
    generate_weyl_bounded(datum, DEFAULT_CLOSURE_BOUND)
}

pub fn generate_weyl_bounded(datum: &RootDatum, bound: usize) -> Result<WeylGroup, WeylError> {
    let generators = datum.simple_reflections();
    let id = IntMatrix::identity(datum.rank());
    let mut elements = vec![id.clone()];
    let mut words = vec![Vec::new()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (g, s) in generators.iter().enumerate() {
            let next = elements[i].mul(s);
            if index.contains_key(&next) {
                continue;
            }
            if elements.len() >= bound {
                return Err(WeylError::ClosureBound(bound));
            }
            let mut w = words[i].clone();
            w.push(g);
            index.insert(next.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            words.push(w);
        }
    }
    Ok(WeylGroup { elements, words, index, generators })
}

/// `M·w·M⁻¹`, checked to lie in `W`.
pub fn twist_apply(datum: &RootDatum, group: &WeylGroup, w: &IntMatrix) -> Result<IntMatrix, WeylError> {
    let image = datum.conjugate_by_twist(w).ok_or(WeylError::TwistOutsideGroup)?;
    if group.contains(&image) {
        Ok(image)
    } else {
        Err(WeylError::TwistOutsideGroup)
    }
}

/// One orbit of `w ↦ x⁻¹·w·σ(x)`.
#[derive(Debug, Clone)]
pub struct FClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub torus_order: Poly,
    /// Column of the coset character table, once matched.
    pub column_index: Option<usize>,
}

impl FClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Orbits of twisted conjugation, in order of first appearance in BFS order.
///
/// Orbits of the whole group coincide with orbits under the generators,
/// since the generators are involutions generating `W`.
pub fn f_classes(datum: &RootDatum, group: &WeylGroup) -> Result<Vec<FClass>, WeylError> {
    let twisted_gens = group
        .generators()
        .iter()
        .map(|s| twist_apply(datum, group, s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut class_of = vec![usize::MAX; group.order()];
    let mut classes = Vec::new();
    for start in 0..group.order() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for (s, ts) in group.generators().iter().zip(&twisted_gens) {
                let next = s.mul(group.element(i)).mul(ts);
                let j = group.index_of(&next).ok_or(WeylError::TwistOutsideGroup)?;
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        let torus_order = torus_order(datum, group.element(start));
        classes.push(FClass { representative: start, members, torus_order, column_index: None });
    }
    Ok(classes)
}
