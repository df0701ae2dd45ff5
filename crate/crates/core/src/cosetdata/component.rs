use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::cyclo::Cyclo;
use super::DataError;
use crate::exactfield::QuadRational;
use crate::finitegroup::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Trivial,
    Z2,
    Z3,
    Z4,
    S3,
    D8,
}

impl FromStr for ComponentKind {
    type Err = DataError;
    fn from_str(s: &str) -> Result<Self, DataError> {
        Ok(match s {
            "trivial" => ComponentKind::Trivial,
            "Z2" => ComponentKind::Z2,
            "Z3" => ComponentKind::Z3,
            "Z4" => ComponentKind::Z4,
            "S3" => ComponentKind::S3,
            "D8" => ComponentKind::D8,
            other => return Err(DataError::Invalid(format!("unknown component group {other:?}"))),
        })
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ComponentKind::Trivial => "trivial",
            ComponentKind::Z2 => "Z2",
            ComponentKind::Z3 => "Z3",
            ComponentKind::Z4 => "Z4",
            ComponentKind::S3 => "S3",
            ComponentKind::D8 => "D8",
        };
        f.write_str(s)
    }
}

/// How `F` acts on the component group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FAction {
    Identity,
    /// D8 only: `r ↦ r⁻¹, s ↦ rs`, exchanging the kernels of ε′ and ε″.
    Swap,
}

impl FromStr for FAction {
    type Err = DataError;
    fn from_str(s: &str) -> Result<Self, DataError> {
        match s {
            "identity" => Ok(FAction::Identity),
            "swap" => Ok(FAction::Swap),
            other => Err(DataError::Invalid(format!("unknown F-action {other:?}"))),
        }
    }
}

impl fmt::Display for FAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FAction::Identity => "identity",
            FAction::Swap => "swap",
        })
    }
}

/// Choice of extension of an F-stable character to `A ⋊ ⟨F⟩`: `φ̃(aF) = ζ·φ(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selector {
    /// ζ = 1
    Trivial,
    /// ζ = −1
    Negative,
}

impl FromStr for Selector {
    type Err = DataError;
    fn from_str(s: &str) -> Result<Self, DataError> {
        match s {
            "trivial" => Ok(Selector::Trivial),
            "negative" => Ok(Selector::Negative),
            other => Err(DataError::Invalid(format!("unknown extension selector {other:?}"))),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Selector::Trivial => "trivial",
            Selector::Negative => "negative",
        })
    }
}

/// A character as a function on group elements.
#[derive(Debug, Clone)]
pub struct Character {
    pub label: String,
    pub values: Vec<Cyclo>,
}

impl Character {
    pub fn degree(&self) -> Cyclo {
        self.values[0]
    }
}

/// One twisted class, with a representative and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentFClass {
    pub representative: usize,
    pub representative_label: String,
    pub size: usize,
}

/// A component group `A(u)` realized as a permutation group, with the F-action
/// as an automorphism and its full ordinary character table.
#[derive(Debug, Clone)]
pub struct ComponentGroup {
    kind: ComponentKind,
    action: FAction,
    group: FiniteGroup,
    perms: Vec<Vec<usize>>,
    sigma: Vec<usize>,
    characters: Vec<Character>,
}

fn perm_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a·b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

impl ComponentGroup {
    pub fn new(kind: ComponentKind, action: FAction) -> Result<Self, DataError> {
        let (points, gens): (usize, Vec<Vec<usize>>) = match kind {
            ComponentKind::Trivial => (1, vec![]),
            ComponentKind::Z2 => (2, vec![cycle(2)]),
            ComponentKind::Z3 => (3, vec![cycle(3)]),
            ComponentKind::Z4 => (4, vec![cycle(4)]),
            // transposition first, then the 3-cycle
            ComponentKind::S3 => (3, vec![vec![1, 0, 2], cycle(3)]),
            // r = rotation of the square, s = reflection fixing vertices 0 and 2
            ComponentKind::D8 => (4, vec![cycle(4), vec![0, 3, 2, 1]]),
        };
        let identity: Vec<usize> = (0..points).collect();
        let (group, perms) =
            FiniteGroup::from_generators(identity, &gens, |a: &Vec<usize>, b: &Vec<usize>| perm_mul(a, b), 64).expect("component groups are tiny");
        let sigma = match (kind, action) {
            (_, FAction::Identity) => group.identity_map(),
            (ComponentKind::D8, FAction::Swap) => {
                let (r, s) = (group.generators()[0], group.generators()[1]);
                group.extend_generator_images(&[group.inv(r), group.mul(r, s)]).expect("swap is an automorphism")
            }
            (k, FAction::Swap) => {
                return Err(DataError::Invalid(format!("the swap action is only defined on D8, not {k}")));
            }
        };
        let characters = character_table(kind, &group, &perms);
        Ok(ComponentGroup { kind, action, group, perms, sigma, characters })
    }

    pub fn kind(&self) -> ComponentKind {
        self.kind
    }

    pub fn action(&self) -> FAction {
        self.action
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, label: &str) -> Result<&Character, DataError> {
        self.characters.iter().find(|c| c.label == label).ok_or_else(|| {
            DataError::Invalid(format!("component group {} has no character {label:?}", self.kind))
        })
    }

    /// Cycle notation of element `a` on the permutation points.
    pub fn element_label(&self, a: usize) -> String {
        let p = &self.perms[a];
        let mut seen = vec![false; p.len()];
        let mut out = String::new();
        for start in 0..p.len() {
            if seen[start] || p[start] == start {
                continue;
            }
            out.push('(');
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                if !out.ends_with('(') {
                    out.push(' ');
                }
                out.push_str(&(x + 1).to_string());
                x = p[x];
            }
            out.push(')');
        }
        if out.is_empty() {
            "1".to_string()
        } else {
            out
        }
    }

    pub fn is_f_stable(&self, chi: &Character) -> bool {
        (0..self.group.order()).all(|a| chi.values[self.sigma[a]] == chi.values[a])
    }
}

/// F-classes of `A(u)`, ordered: identity class first, then by element order,
/// then by the smallest BFS index.
pub fn component_f_classes(g: &ComponentGroup) -> Vec<ComponentFClass> {
    let grp = g.group();
    let mut classes = grp.twisted_classes(g.sigma());
    classes.sort_by_key(|c| {
        let min_order = c.iter().map(|&a| grp.element_order(a)).min().unwrap_or(1);
        (!c.contains(&grp.identity()), min_order, c[0])
    });
    classes
        .into_iter()
        .map(|c| ComponentFClass { representative: c[0], representative_label: g.element_label(c[0]), size: c.len() })
        .collect()
}

/// Values `φ̃(aF)` on the F-classes, in the order of [`component_f_classes`].
pub fn extension_values(g: &ComponentGroup, character: &str, selector: Selector, d: u32) -> Result<Vec<QuadRational>, DataError> {
    let chi = g.character(character)?;
    if !g.is_f_stable(chi) {
        return Err(DataError::NotFStable { group: g.kind.to_string(), character: character.to_string() });
    }
    if g.action == FAction::Swap && chi.degree() != Cyclo::from_integer(1) {
        return Err(DataError::Invalid(format!(
            "extensions of the non-linear character {character:?} under a nontrivial action are not supported"
        )));
    }
    let zeta = match selector {
        Selector::Trivial => 1,
        Selector::Negative => -1,
    };
    component_f_classes(g)
        .iter()
        .map(|c| {
            let v = chi.values[c.representative]
                .to_rational()
                .ok_or_else(|| DataError::Invalid(format!("character {character:?} is not rational-valued")))?;
            let r = BigRational::new(BigInt::from(*v.numer() * zeta), BigInt::from(*v.denom()));
            Ok(QuadRational::from_rational(r, d))
        })
        .collect()
}

fn linear(group: &FiniteGroup, label: &str, on_generators: &[Cyclo]) -> Character {
    let values = (0..group.order())
        .map(|a| group.word(a).iter().fold(Cyclo::from_integer(1), |acc, &k| acc * on_generators[k]))
        .collect();
    Character { label: label.to_string(), values }
}

fn character_table(kind: ComponentKind, group: &FiniteGroup, perms: &[Vec<usize>]) -> Vec<Character> {
    let one = Cyclo::from_integer(1);
    let minus = Cyclo::from_integer(-1);
    let fixed = |a: usize| perms[a].iter().enumerate().filter(|(i, &x)| *i == x).count() as i64;
    match kind {
        ComponentKind::Trivial => vec![linear(group, "1", &[])],
        ComponentKind::Z2 => vec![linear(group, "1", &[one]), linear(group, "sign", &[minus])],
        ComponentKind::Z3 => vec![
            linear(group, "1", &[one]),
            linear(group, "omega", &[Cyclo::nth_root(3, 1)]),
            linear(group, "omega2", &[Cyclo::nth_root(3, 2)]),
        ],
        ComponentKind::Z4 => vec![
            linear(group, "1", &[one]),
            linear(group, "i", &[Cyclo::nth_root(4, 1)]),
            linear(group, "-1", &[minus]),
            linear(group, "-i", &[Cyclo::nth_root(4, 3)]),
        ],
        ComponentKind::S3 => {
            // permutation character minus the trivial one
            let theta = (0..group.order()).map(|a| Cyclo::from_integer(fixed(a) - 1)).collect();
            vec![
                linear(group, "1", &[one, one]),
                linear(group, "sign", &[minus, one]),
                Character { label: "theta".into(), values: theta },
            ]
        }
        ComponentKind::D8 => {
            // trace of the action on the plane, vertices at (1,0), (0,1), (-1,0), (0,-1)
            let coords = [(1, 0), (0, 1), (-1, 0), (0, -1)];
            let chi2 = (0..group.order())
                .map(|a| Cyclo::from_integer(coords[perms[a][0]].0 + coords[perms[a][1]].1))
                .collect();
            vec![
                linear(group, "1", &[one, one]),
                linear(group, "sign", &[one, minus]),
                linear(group, "eps'", &[minus, one]),
                linear(group, "eps''", &[minus, minus]),
                Character { label: "chi2".into(), values: chi2 },
            ]
        }
    }
}
