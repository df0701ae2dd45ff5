use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::Serialize;

use super::DisconnectedError;
use crate::finitegroup::FiniteGroup;

/// Base groups of the model suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelName {
    Z4,
    S3,
    D8,
    Q8,
    A4,
}

impl ModelName {
    pub const ALL: [ModelName; 5] = [ModelName::Z4, ModelName::S3, ModelName::D8, ModelName::Q8, ModelName::A4];
}

impl FromStr for ModelName {
    type Err = DisconnectedError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "z4" => Ok(ModelName::Z4),
            "s3" => Ok(ModelName::S3),
            "d8" => Ok(ModelName::D8),
            "q8" => Ok(ModelName::Q8),
            "a4" => Ok(ModelName::A4),
            _ => Err(DisconnectedError::Unsupported(s.to_string())),
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelName::Z4 => "z4",
            ModelName::S3 => "s3",
            ModelName::D8 => "d8",
            ModelName::Q8 => "q8",
            ModelName::A4 => "a4",
        })
    }
}

/// A base group `H` with an involutive automorphism `σ`. The ambient group is
/// `(H×H)⋊⟨τ⟩` with `τ(g₁,g₂)τ⁻¹ = (σ(g₂),σ(g₁))`; σ = id gives the plain swap.
#[derive(Debug, Clone)]
pub struct CosetModel {
    pub name: String,
    pub automorphism: String,
    pub base: FiniteGroup,
    pub sigma: Vec<usize>,
}

/// `(g₁, g₂, e)` stands for `(g₁,g₂)·τᵉ`.
type AmbientElement = (usize, usize, u8);

impl CosetModel {
    pub fn new(name: &str, automorphism: &str, base: FiniteGroup, sigma: Vec<usize>) -> Self {
        assert!(base.is_automorphism(&sigma), "{name}/{automorphism}: not an automorphism");
        assert_eq!(base.compose(&sigma, &sigma), base.identity_map(), "{name}/{automorphism}: not involutive");
        CosetModel { name: name.to_string(), automorphism: automorphism.to_string(), base, sigma }
    }

    fn mul(&self, x: &AmbientElement, y: &AmbientElement) -> AmbientElement {
        let h = &self.base;
        let (c, d) = if x.2 == 0 { (y.0, y.1) } else { (self.sigma[y.1], self.sigma[y.0]) };
        (h.mul(x.0, c), h.mul(x.1, d), x.2 ^ y.2)
    }

    /// The ambient group and its elements as `(g₁, g₂, e)`.
    pub fn ambient(&self) -> (FiniteGroup, Vec<AmbientElement>) {
        let h = &self.base;
        let mut gens: Vec<AmbientElement> = Vec::new();
        for &s in h.generators() {
            gens.push((s, 0, 0));
            gens.push((0, s, 0));
        }
        gens.push((0, 0, 1));
        let bound = 2 * h.order() * h.order() + 1;
        FiniteGroup::from_generators((0, 0, 0), &gens, |x, y| self.mul(x, y), bound).expect("ambient group is finite")
    }

    /// `(g₁,g₂)τ ↦ g₁·σ(g₂)`.
    pub fn class_map(&self, g1: usize, g2: usize) -> usize {
        self.base.mul(g1, self.sigma[g2])
    }
}

/// Exhaustive checks of the coset class bijection, centralizer doubling and order doubling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub model: String,
    pub automorphism: String,
    pub base_order: usize,
    pub ambient_order: usize,
    pub coset_class_count: usize,
    pub base_class_count: usize,
    /// Conjugacy in the ambient group agrees with conjugacy of images in `H`.
    pub bijection_holds: bool,
    /// `(|C_ambient(f(x))|, |C_H(x)|)` per class of `H`, `f(x) = (x,1)τ`.
    pub centralizer_pairs: Vec<(usize, usize)>,
    /// `(order of f(x), order of x)` per class of `H`.
    pub order_pairs: Vec<(usize, usize)>,
    /// Coset elements `(x₁,x₂)τ` whose order is not `2·order(x₁σ(x₂))`.
    pub order_violations: usize,
    /// `τ(g₁,g₂)ττ⁻¹ = (σ(g₂),σ(g₁))τ` for every pair.
    pub tau_identity_holds: bool,
    /// Order of the τ-fixed subgroup of `H×H`, expected `|H|`.
    pub fixed_subgroup_order: usize,
}

impl ClassReport {
    pub fn passes(&self) -> bool {
        self.ambient_order == 2 * self.base_order * self.base_order
            && self.coset_class_count == self.base_class_count
            && self.bijection_holds
            && self.centralizer_pairs.iter().all(|&(a, h)| a == 2 * h)
            && self.order_pairs.iter().all(|&(a, h)| a == 2 * h)
            && self.order_violations == 0
            && self.tau_identity_holds
            && self.fixed_subgroup_order == self.base_order
    }
}

pub fn verify_coset_conjugacy(model: &CosetModel) -> ClassReport {
    let h = &model.base;
    let (amb, elements) = model.ambient();
    let index: HashMap<AmbientElement, usize> = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let amb_ids = amb.class_ids(&amb.conjugacy_classes());
    let h_classes = h.conjugacy_classes();
    let h_ids = h.class_ids(&h_classes);

    // ambient class ↦ base class must be a well-defined bijection on the coset
    let mut forward: HashMap<usize, usize> = HashMap::new();
    let mut backward: HashMap<usize, usize> = HashMap::new();
    let mut bijection_holds = true;
    let mut order_violations = 0;
    for g1 in 0..h.order() {
        for g2 in 0..h.order() {
            let a = index[&(g1, g2, 1)];
            let image = model.class_map(g1, g2);
            let (ac, hc) = (amb_ids[a], h_ids[image]);
            bijection_holds &= *forward.entry(ac).or_insert(hc) == hc;
            bijection_holds &= *backward.entry(hc).or_insert(ac) == ac;
            if amb.element_order(a) != 2 * h.element_order(image) {
                order_violations += 1;
            }
        }
    }
    bijection_holds &= backward.len() == h_classes.len();

    let tau = index[&(0, 0, 1)];
    let tau_identity_holds = (0..h.order()).all(|g1| {
        (0..h.order()).all(|g2| {
            let lhs = amb.mul(amb.mul(tau, index[&(g1, g2, 1)]), amb.inv(tau));
            lhs == index[&(model.sigma[g2], model.sigma[g1], 1)]
        })
    });
    let fixed_subgroup_order = (0..h.order())
        .flat_map(|g1| (0..h.order()).map(move |g2| (g1, g2)))
        .filter(|&(g1, g2)| {
            let x = index[&(g1, g2, 0)];
            amb.mul(amb.mul(tau, x), amb.inv(tau)) == x
        })
        .count();

    let reps: Vec<usize> = h_classes.iter().map(|c| c[0]).collect();
    let centralizer_pairs = reps.iter().map(|&x| (amb.centralizer_order(index[&(x, 0, 1)]), h.centralizer_order(x))).collect();
    let order_pairs = reps.iter().map(|&x| (amb.element_order(index[&(x, 0, 1)]), h.element_order(x))).collect();
    let coset_class_count = {
        let mut ids: Vec<usize> = elements.iter().enumerate().filter(|(_, e)| e.2 == 1).map(|(i, _)| amb_ids[i]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    };

    ClassReport {
        model: model.name.clone(),
        automorphism: model.automorphism.clone(),
        base_order: h.order(),
        ambient_order: amb.order(),
        coset_class_count,
        base_class_count: h_classes.len(),
        bijection_holds,
        centralizer_pairs,
        order_pairs,
        order_violations,
        tau_identity_holds,
        fixed_subgroup_order,
    }
}

fn perm_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn perm_group(points: usize, gens: &[Vec<usize>]) -> (FiniteGroup, Vec<Vec<usize>>) {
    FiniteGroup::from_generators((0..points).collect(), gens, |a: &Vec<usize>, b: &Vec<usize>| perm_mul(a, b), 1000).expect("small permutation group")
}

/// The map induced on indices by a map on concrete elements.
fn induced<T: Clone + Eq + Hash>(elements: &[T], f: impl Fn(&T) -> T) -> Vec<usize> {
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    elements.iter().map(|e| index[&f(e)]).collect()
}

fn conjugation_by(t: &[usize]) -> impl Fn(&Vec<usize>) -> Vec<usize> + '_ {
    // t is an involution, so t⁻¹ = t
    move |p| (0..t.len()).map(|x| t[p[t[x]]]).collect()
}

/// Quaternion units `±1, ±i, ±j, ±k` as integer 4-vectors.
fn quat_mul(a: &[i8; 4], b: &[i8; 4]) -> [i8; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

/// The two models for one base group: identity and a nontrivial involution.
pub fn coset_model(name: ModelName) -> Vec<CosetModel> {
    let label = name.to_string();
    match name {
        ModelName::Z4 => {
            let (g, elems) = FiniteGroup::from_generators(0u8, &[1u8], |a, b| (a + b) % 4, 8).expect("Z4");
            let inversion = induced(&elems, |x| (4 - x) % 4);
            vec![
                CosetModel::new(&label, "identity", g.clone(), g.identity_map()),
                CosetModel::new(&label, "inversion", g, inversion),
            ]
        }
        ModelName::S3 => {
            let (g, elems) = perm_group(3, &[vec![1, 0, 2], vec![1, 2, 0]]);
            let conj = induced(&elems, conjugation_by(&[1, 0, 2]));
            vec![
                CosetModel::new(&label, "identity", g.clone(), g.identity_map()),
                CosetModel::new(&label, "conjugation by (1 2)", g, conj),
            ]
        }
        ModelName::D8 => {
            let (g, _) = perm_group(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]);
            let (r, s) = (g.generators()[0], g.generators()[1]);
            let swap = g.extend_generator_images(&[g.inv(r), g.mul(r, s)]).expect("swap is an automorphism");
            vec![CosetModel::new(&label, "identity", g.clone(), g.identity_map()), CosetModel::new(&label, "swap", g, swap)]
        }
        ModelName::Q8 => {
            let (g, _) = FiniteGroup::from_generators([1i8, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], quat_mul, 16)
                .expect("Q8");
            let (i, j) = (g.generators()[0], g.generators()[1]);
            let exchange = g.extend_generator_images(&[j, i]).expect("i <-> j is an automorphism");
            vec![
                CosetModel::new(&label, "identity", g.clone(), g.identity_map()),
                CosetModel::new(&label, "i<->j, k->-k", g, exchange),
            ]
        }
        ModelName::A4 => {
            let (g, elems) = perm_group(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]);
            let conj = induced(&elems, conjugation_by(&[1, 0, 2, 3]));
            vec![
                CosetModel::new(&label, "identity", g.clone(), g.identity_map()),
                CosetModel::new(&label, "conjugation by (1 2) in S4", g, conj),
            ]
        }
    }
}

/// Reports for every automorphism choice of every listed base group.
pub fn model_suite(names: &[ModelName]) -> Vec<ClassReport> {
    names.iter().flat_map(|&n| coset_model(n)).map(|m| verify_coset_conjugacy(&m)).collect()
}
