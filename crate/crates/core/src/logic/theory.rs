use crate::logic::PropSet;

/// A deductively closed set of formulas, held as its set of models.
///
/// `K` contains `φ` iff every model of `K` satisfies `φ`; the inconsistent
/// theory `K_⊥` has no models.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Theory {
    models: PropSet,
}

impl Theory {
    pub fn from_models(models: PropSet) -> Self {
        Theory { models }
    }

    /// `K_⊥`, the theory containing every formula.
    pub fn inconsistent(universe: usize) -> Self {
        Theory::from_models(PropSet::empty(universe))
    }

    /// `Cn(∅)`, the set of tautologies.
    pub fn tautologies(universe: usize) -> Self {
        Theory::from_models(PropSet::full(universe))
    }

    pub fn models(&self) -> &PropSet {
        &self.models
    }

    pub fn into_models(self) -> PropSet {
        self.models
    }

    pub fn universe(&self) -> usize {
        self.models.universe()
    }

    pub fn is_consistent(&self) -> bool {
        !self.models.is_empty()
    }

    /// `Cn(K, φ)`.
    pub fn cn_with(&self, f: &PropSet) -> Theory {
        Theory::from_models(self.models.intersection(f))
    }

    /// Whether `φ ∈ K`.
    pub fn contains(&self, f: &PropSet) -> bool {
        self.models.is_subset(f)
    }

    /// Whether `¬φ ∈ K`, i.e. `K` and `φ` share no model.
    pub fn contains_negation(&self, f: &PropSet) -> bool {
        self.models.is_disjoint(f)
    }

    /// Intersection of the formula sets: the union of the model sets.
    pub fn intersect(&self, other: &Theory) -> Theory {
        Theory::from_models(self.models.union(&other.models))
    }

    /// Inclusion of formula sets, `self ⊆ other`.
    pub fn is_subtheory_of(&self, other: &Theory) -> bool {
        other.models.is_subset(&self.models)
    }
}

impl From<PropSet> for Theory {
    fn from(models: PropSet) -> Self {
        Theory::from_models(models)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_formula, Signature};

    fn sig() -> Signature {
        Signature::new(["p", "q"]).unwrap()
    }

    fn m(text: &str) -> PropSet {
        parse_formula(text, &sig()).unwrap().models(&sig())
    }

    fn cn(text: &str) -> Theory {
        Theory::from_models(m(text))
    }

    #[test]
    fn cn_with_examples() {
        assert_eq!(cn("q").cn_with(&m("p")), cn("p & q"));
        assert_eq!(
            Theory::inconsistent(4).cn_with(&m("p")),
            Theory::inconsistent(4)
        );
        assert_eq!(cn("p | q").cn_with(&m("true")), cn("p | q"));
    }

    #[test]
    fn contains_examples() {
        assert!(cn("!q").contains(&m("!q")));
        assert!(!cn("p").contains(&m("!q")));
        assert!(Theory::inconsistent(4).contains(&m("false")));
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(cn("!q").intersect(&cn("!p")), cn("!(p & q)"));
        assert_eq!(cn("p").intersect(&Theory::inconsistent(4)), cn("p"));
        assert_eq!(cn("p").intersect(&cn("p")), cn("p"));
    }

    #[test]
    fn inclusion_is_reverse_model_inclusion() {
        assert!(cn("p").is_subtheory_of(&cn("p & q")));
        assert!(cn("p").is_subtheory_of(&Theory::inconsistent(4)));
        assert!(!cn("p & q").is_subtheory_of(&cn("p")));
    }
}
