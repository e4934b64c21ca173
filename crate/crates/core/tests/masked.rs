mod common;

use common::*;
use jumpomega::masked::{
    masked_complement, masked_equivalent, masked_inclusion, masked_intersect, masked_union,
    ExtVector, Mask, MaskedSemilinearSet,
};
use jumpomega::oracle::grid;
use jumpomega::Limits;
use proptest::prelude::*;
use rand::Rng;

fn points(dim: usize) -> Vec<ExtVector> {
    Mask::all(dim)
        .flat_map(|m| grid(dim, 7).map(move |x| ExtVector::compose(&x, &m)))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn pair(seed: u64) -> (MaskedSemilinearSet, MaskedSemilinearSet) {
    let mut r = rng(seed);
    let sigma = alphabet(if r.gen_bool(0.5) { "ab" } else { "abc" });
    (random_masked(&mut r, &sigma), random_masked(&mut r, &sigma))
}

fn tight() -> Limits {
    Limits {
        dnf_atoms: 20_000,
        hilbert_frontier: 2_000,
        ..Limits::default()
    }
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn canonical_form_keeps_members(seed in any::<u64>()) {
        let (m, _) = pair(seed);
        let c = m.canonicalize();
        prop_assert!(c.satisfies_canonical_form());
        prop_assert_eq!(c.canonicalize(), c.clone());
        for x in points(m.dim()) {
            prop_assert_eq!(c.contains(&x).unwrap(), m.contains(&x).unwrap(), "{}", x);
        }
    }

    #[test]
    fn operations_are_pointwise(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let l = Limits::default();
        let meet = masked_intersect(&a, &b, &l).unwrap();
        let join = masked_union(&a, &b).unwrap();
        let not_a = masked_complement(&a, &l).unwrap();
        for x in points(a.dim()) {
            let (p, q) = (a.contains(&x).unwrap(), b.contains(&x).unwrap());
            prop_assert_eq!(meet.contains(&x).unwrap(), p && q, "{}", x);
            prop_assert_eq!(join.contains(&x).unwrap(), p || q, "{}", x);
            prop_assert_eq!(not_a.contains(&x).unwrap(), !p, "{}", x);
        }
        // complementing a complement may legitimately exceed the caps
        match masked_complement(&not_a, &tight()) {
            Ok(back) => prop_assert!(masked_equivalent(&back, &a, &l).unwrap()),
            Err(e) => prop_assert!(e.is_resource_cap(), "{}", e),
        }
    }

    #[test]
    fn inclusion_matches_empty_difference(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let l = Limits::default();
        let difference = masked_intersect(&a, &masked_complement(&b, &l).unwrap(), &l).unwrap();
        prop_assert_eq!(masked_inclusion(&a, &b, &l).unwrap(), difference.is_empty());
        prop_assert!(masked_inclusion(&a, &masked_union(&a, &b).unwrap(), &l).unwrap());
        prop_assert!(masked_inclusion(&masked_intersect(&a, &b, &l).unwrap(), &b, &l).unwrap());
    }
}
