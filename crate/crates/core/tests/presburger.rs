mod common;

use common::*;
use jumpomega::oracle::grid;
use jumpomega::presburger::{
    cooper_eliminate, decide_sentence, formula_to_semilinear, hilbert_basis, semilinear_to_formula,
    solve_nonneg, Formula, HomSystem, Term, Var,
};
use jumpomega::semilinear::{FinVector, LinearSet};
use jumpomega::Limits;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

fn env2(x: i64, y: i64) -> impl Fn(Var) -> BigInt {
    move |v: Var| BigInt::from(if v.0 == 0 { x } else { y })
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn elimination_preserves_truth(seed in any::<u64>(), universal in any::<bool>()) {
        let mut r = rng(seed);
        let body = random_formula(&mut r, &[0, 1, 2], 3);
        let f = if universal { Formula::forall(Var(2), body) } else { Formula::exists(Var(2), body) };
        let qf = cooper_eliminate(&f, &Limits::default()).unwrap();
        prop_assert!(qf.is_quantifier_free());
        prop_assert!(qf.free_vars().is_subset(&f.free_vars()));
        for x in 0..=10 {
            for y in 0..=10 {
                let env = env2(x, y);
                prop_assert_eq!(qf.eval(&env).unwrap(), f.eval_bounded(&env, 120), "{} at ({}, {})", f, x, y);
            }
        }
    }

    #[test]
    fn bounded_sentences_are_decided(seed in any::<u64>()) {
        // quantifiers guarded by an explicit bound can be checked exhaustively
        let mut r = rng(seed);
        let body = random_formula(&mut r, &[0, 1], 2);
        let guard = |v: u32| Formula::le(Term::var(Var(v)), Term::constant(15));
        let inner = Formula::forall(Var(1), guard(1).implies(body.clone()));
        let sentence = Formula::exists(Var(0), Formula::and(vec![guard(0), inner]));
        let expected = (0..=15).any(|x| (0..=15).all(|y| body.eval(&env2(x, y)).unwrap()));
        prop_assert_eq!(decide_sentence(&sentence, &Limits::default()).unwrap(), expected);
    }

    #[test]
    fn printed_formulas_parse_back(seed in any::<u64>()) {
        let mut r = rng(seed);
        let body = random_formula(&mut r, &[0, 1, 2], 3);
        let f = Formula::exists(Var(2), body);
        prop_assert_eq!(Formula::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn hilbert_basis_is_minimal_and_generating(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = r.gen_range(2..=4);
        let rows: Vec<Vec<i64>> = (0..r.gen_range(1..=2)).map(|_| (0..d).map(|_| r.gen_range(-3..=3)).collect()).collect();
        let sys = HomSystem::new(d, rows).unwrap();
        let basis = hilbert_basis(&sys, &Limits::default()).unwrap();
        for (i, h) in basis.iter().enumerate() {
            prop_assert!(sys.is_solution(h) && h.iter().any(|&x| x > 0));
            for (j, g) in basis.iter().enumerate() {
                prop_assert!(i == j || !g.iter().zip(h).all(|(a, b)| a <= b));
            }
        }
        let span = LinearSet::new(FinVector::zero(d), basis.iter().map(|h| FinVector::new(h.clone()))).unwrap();
        for p in grid(d, 4) {
            prop_assert_eq!(span.contains(&p), sys.is_solution(p.as_slice()), "{}", p);
        }
    }

    #[test]
    fn inhomogeneous_solutions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = r.gen_range(1..=3);
        let rows: Vec<Vec<i64>> = vec![(0..d).map(|_| r.gen_range(-3..=3)).collect()];
        let rhs = vec![r.gen_range(-4..=4)];
        let (particular, homogeneous) = solve_nonneg(d, &rows, &rhs, &Limits::default()).unwrap();
        let solves = |x: &[u64]| rows[0].iter().zip(x).map(|(&a, &b)| a * b as i64).sum::<i64>() == rhs[0];
        let sets: Vec<LinearSet> = particular
            .iter()
            .map(|p| LinearSet::new(FinVector::new(p.clone()), homogeneous.iter().map(|h| FinVector::new(h.clone()))).unwrap())
            .collect();
        for p in grid(d, 6) {
            prop_assert_eq!(sets.iter().any(|s| s.contains(&p)), solves(p.as_slice()), "{}", p);
        }
    }

    #[test]
    fn sets_and_formulas_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = r.gen_range(1..=2);
        let s = small_set(&mut r, d);
        let f = semilinear_to_formula(&s);
        let qf = cooper_eliminate(&f, &Limits::default()).unwrap();
        let back = formula_to_semilinear(&qf, d, &Limits::default()).unwrap();
        for p in grid(d, 9) {
            let env = |v: Var| BigInt::from(p.as_slice()[v.0 as usize]);
            let member = s.contains(&p).unwrap();
            prop_assert_eq!(f.eval_bounded(&env, 40), member, "{}", p);
            prop_assert_eq!(back.contains(&p).unwrap(), member, "{}", p);
        }
    }
}
