use std::sync::LazyLock;

use proptest::prelude::*;

use lattice16::classifier::{Classifier, Evidence, Justification, Label};
use lattice16::lattice::{is_ppt, kappa, LatticeSubset};
use lattice16::separability::check_certificate;
use lattice16::symmetry::SymmetryGroup;

static CLASSIFIER: LazyLock<Classifier> = LazyLock::new(Classifier::default);

fn subset() -> impl Strategy<Value = LatticeSubset> {
    (1u16..=u16::MAX).prop_map(LatticeSubset)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn label_and_kappa_invariant_under_group(s in subset(), g in 0usize..1152) {
        let group = SymmetryGroup::shared();
        let t = group.act_by_index(g, s);
        let a = CLASSIFIER.classify(s).unwrap();
        let b = CLASSIFIER.classify(t).unwrap();
        prop_assert_eq!(a.label, b.label);
        prop_assert_eq!(kappa(s), kappa(t));
        prop_assert_eq!(is_ppt(s).unwrap(), is_ppt(t).unwrap());
        prop_assert_eq!(group.canonical_form(s), group.canonical_form(t));
    }

    #[test]
    fn justification_matches_label(s in subset()) {
        let c = CLASSIFIER.classify(s).unwrap();
        prop_assert!(c.justification.supports(c.label));
        prop_assert_ne!(c.label, Label::Unknown);
        match c.justification {
            Justification::Prop1bSite => prop_assert!(c.n <= 10),
            Justification::Prop3Witness => prop_assert!(c.n <= 11),
            Justification::Prop1aViolation => prop_assert!(!is_ppt(s).unwrap()),
            _ => {}
        }
        if c.label == Label::PptEntangled {
            prop_assert!(c.n <= 11 && c.kappa <= 1);
        }
    }

    #[test]
    fn certificates_are_sound(s in subset()) {
        let c = CLASSIFIER.classify(s).unwrap();
        if let Evidence::Certificate(cert) = &c.evidence {
            prop_assert_eq!(cert.target, s);
            check_certificate(CLASSIFIER.basis(), cert).unwrap();
            prop_assert!(cert.weights.keys().all(|j| j.is_subset_of(s)));
        }
    }

    #[test]
    fn npt_evidence_names_a_crowded_cross(s in subset()) {
        let c = CLASSIFIER.classify(s).unwrap();
        if let Evidence::ViolatingSite { site, cross_count } = c.evidence {
            prop_assert_eq!(s.cross_count(site), cross_count);
            prop_assert!(2 * cross_count > s.len());
        }
    }
}
