//! Irreducible decomposition and the minimal finite-index parabolic.

use crate::system::CoxeterSystem;
use crate::word::GeneratorSubset;

impl CoxeterSystem {
    /// The unique partition `S = S_1 ⊔ … ⊔ S_r` with `W = W_{S_1} × … × W_{S_r}`
    /// and each factor irreducible. Parts are sorted by least member.
    pub fn irreducible_components(&self) -> Vec<GeneratorSubset> {
        self.diagram_components(self.all())
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible_components().len() == 1
    }

    /// `S̃`: the union of the components with infinite parabolic subgroup.
    /// `W_{S̃}` is the minimum parabolic subgroup of finite index.
    pub fn tilde_s(&self) -> GeneratorSubset {
        self.irreducible_components()
            .into_iter()
            .filter(|&c| !self.is_spherical(c))
            .fold(GeneratorSubset::EMPTY, GeneratorSubset::union)
    }

    /// The infinite irreducible components, i.e. the parts of `S̃`.
    pub fn infinite_components(&self) -> Vec<GeneratorSubset> {
        self.irreducible_components()
            .into_iter()
            .filter(|&c| !self.is_spherical(c))
            .collect()
    }

    /// The system restricted to a subset, with labels carried over.
    pub fn parabolic(&self, t: GeneratorSubset) -> CoxeterSystem {
        let members: Vec<_> = t.iter().collect();
        let matrix = crate::CoxeterMatrix::from_fn(members.len(), |i, j| self.m(members[i], members[j]));
        let labels = members.iter().map(|&s| self.label(s).to_string()).collect();
        CoxeterSystem::new(matrix, labels).expect("restriction of a valid system is valid")
    }
}
