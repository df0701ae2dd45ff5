use serde::Serialize;

use super::DisconnectedError;
use crate::finitegroup::FiniteGroup;

/// 4×4 matrix over GF(2); bit `j` of row `i` is the entry `(i, j)`.
type Mat2 = [u8; 4];

const IDENTITY: Mat2 = [0b0001, 0b0010, 0b0100, 0b1000];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [0u8; 4];
    for i in 0..4 {
        for j in 0..4 {
            if a[i] >> j & 1 == 1 {
                out[i] ^= b[j];
            }
        }
    }
    out
}

/// `B(x, y) = x₁y₃ + x₃y₁ + x₂y₄ + x₄y₂`, vectors as 4-bit masks.
fn form(x: u8, y: u8) -> u8 {
    let bit = |v: u8, i: usize| v >> i & 1;
    (bit(x, 0) & bit(y, 2)) ^ (bit(x, 2) & bit(y, 0)) ^ (bit(x, 1) & bit(y, 3)) ^ (bit(x, 3) & bit(y, 1))
}

/// `t_v(x) = x + B(x, v)·v`, as the matrix whose column `j` is `t_v(e_j)`.
fn transvection(v: u8) -> Mat2 {
    let mut m = [0u8; 4];
    for j in 0..4 {
        let image = (1u8 << j) ^ if form(1 << j, v) == 1 { v } else { 0 };
        for (i, row) in m.iter_mut().enumerate() {
            *row |= (image >> i & 1) << j;
        }
    }
    m
}

/// Sp₄(2) on two generators with an outer involution whose fixed points have order 20.
#[derive(Debug, Clone)]
pub struct Sp42Model {
    pub group: FiniteGroup,
    pub matrices: Vec<[u8; 4]>,
    pub sigma: Vec<usize>,
    pub fixed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sp42Report {
    pub group_order: usize,
    pub automorphisms_found: usize,
    pub sigma_is_outer_involution: bool,
    pub fixed_subgroup_order: usize,
    pub fixed_class_count: usize,
    /// Element order of each class of the fixed subgroup, sorted.
    pub fixed_class_orders: Vec<usize>,
    pub fixed_class_sizes: Vec<usize>,
    pub extension_order: usize,
    pub outer_coset_class_count: usize,
}

impl Sp42Report {
    pub fn passes(&self) -> bool {
        self.group_order == 720
            && self.sigma_is_outer_involution
            && self.fixed_subgroup_order == 20
            && self.fixed_class_count == 5
            && self.fixed_class_orders == [1, 2, 4, 4, 5]
            && self.extension_order == 1440
            && self.outer_coset_class_count == 5
    }
}

fn generated_order(g: &FiniteGroup, a: usize, b: usize) -> usize {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for s in [a, b] {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

/// Builds Sp₄(2), enumerates its automorphisms through images of a
/// two-element generating set, and picks the first outer involution
/// whose fixed subgroup has order 20.
pub fn sp4_2_model() -> Result<(Sp42Model, Sp42Report), DisconnectedError> {
    let transvections: Vec<Mat2> = (1u8..16).map(transvection).collect();
    let (full, mats) = FiniteGroup::from_generators(IDENTITY, &transvections, mat_mul, 10_000).expect("Sp4(2) is finite");

    // a transvection together with the first element that generates everything with it
    let a = full.generators()[0];
    let b = (0..full.order())
        .find(|&b| generated_order(&full, a, b) == full.order())
        .expect("Sp4(2) is 2-generated");
    let (group, matrices) =
        FiniteGroup::from_generators(IDENTITY, &[mats[a], mats[b]], mat_mul, 10_000).expect("same group");
    let (ga, gb) = (group.generators()[0], group.generators()[1]);
    let orders: Vec<usize> = (0..group.order()).map(|x| group.element_order(x)).collect();
    let ab_order = orders[group.mul(ga, gb)];

    let mut automorphisms = Vec::new();
    for x in (0..group.order()).filter(|&x| orders[x] == orders[ga]) {
        for y in (0..group.order()).filter(|&y| orders[y] == orders[gb] && orders[group.mul(x, y)] == ab_order) {
            if let Ok(map) = group.extend_generator_images(&[x, y]) {
                automorphisms.push(map);
            }
        }
    }
    let identity = group.identity_map();
    let sigma = automorphisms
        .iter()
        .find(|m| {
            **m != identity
                && group.compose(m, m) == identity
                && !group.is_inner(m)
                && group.fixed_points(m).len() == 20
        })
        .cloned()
        .ok_or(DisconnectedError::NoSuzukiInvolution)?;

    let fixed = group.fixed_points(&sigma);
    let sub = group.subgroup(&fixed);
    let mut classes: Vec<(usize, usize)> =
        sub.conjugacy_classes().iter().map(|c| (sub.element_order(c[0]), c.len())).collect();
    classes.sort_unstable();

    // H⋊⟨σ⟩ as pairs (h, e) meaning h·σᵉ
    let ext_mul = |x: &(usize, u8), y: &(usize, u8)| {
        let h = if x.1 == 0 { y.0 } else { sigma[y.0] };
        (group.mul(x.0, h), x.1 ^ y.1)
    };
    let ext_gens: Vec<(usize, u8)> = vec![(ga, 0), (gb, 0), (0, 1)];
    let (ext, ext_elems) = FiniteGroup::from_generators((0usize, 0u8), &ext_gens, ext_mul, 2000).expect("extension");
    let ext_ids = ext.class_ids(&ext.conjugacy_classes());
    let mut outer: Vec<usize> = ext_elems.iter().enumerate().filter(|(_, e)| e.1 == 1).map(|(i, _)| ext_ids[i]).collect();
    outer.sort_unstable();
    outer.dedup();

    let report = Sp42Report {
        group_order: group.order(),
        automorphisms_found: automorphisms.len(),
        sigma_is_outer_involution: group.compose(&sigma, &sigma) == identity && !group.is_inner(&sigma),
        fixed_subgroup_order: sub.order(),
        fixed_class_count: classes.len(),
        fixed_class_orders: classes.iter().map(|c| c.0).collect(),
        fixed_class_sizes: classes.iter().map(|c| c.1).collect(),
        extension_order: ext.order(),
        outer_coset_class_count: outer.len(),
    };
    Ok((Sp42Model { group, matrices: matrices.to_vec(), sigma, fixed }, report))
}
