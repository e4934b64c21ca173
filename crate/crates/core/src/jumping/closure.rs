use super::dba::masked_to_dba;
use super::parikh::jumping_parikh;
use crate::automata::algebra::disjoint_union;
use crate::automata::{buchi_emptiness, fixtures, BuchiAutomaton};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::masked::{masked_complement, masked_inclusion, masked_intersect};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    Union,
    Intersection,
    Complement,
    Determinize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecisionProblem {
    Empty,
    Containment,
    Equivalence,
    Universality,
}

fn second<'a>(b: Option<&'a BuchiAutomaton>, what: &'static str) -> Result<&'a BuchiAutomaton> {
    b.ok_or(Error::MissingOperand(what))
}

/// An automaton for the union, intersection or complement of jumping
/// languages, or a deterministic automaton with the same jumping language.
///
/// Union places both automata side by side; every other kind goes through
/// the masked Parikh image and returns a deterministic automaton.
pub fn jumping_closure(
    kind: ClosureKind,
    a: &BuchiAutomaton,
    b: Option<&BuchiAutomaton>,
    limits: &Limits,
) -> Result<BuchiAutomaton> {
    match kind {
        ClosureKind::Union => {
            let b = second(b, "union")?;
            a.alphabet().ensure_same(b.alphabet())?;
            Ok(BuchiAutomaton::new(disjoint_union(a, b)))
        }
        ClosureKind::Intersection => {
            let b = second(b, "intersection")?;
            a.alphabet().ensure_same(b.alphabet())?;
            let m = masked_intersect(
                &jumping_parikh(a, limits)?,
                &jumping_parikh(b, limits)?,
                limits,
            )?;
            masked_to_dba(&m, limits)
        }
        ClosureKind::Complement => {
            let m = masked_complement(&jumping_parikh(a, limits)?, limits)?;
            masked_to_dba(&m, limits)
        }
        ClosureKind::Determinize => masked_to_dba(&jumping_parikh(a, limits)?, limits),
    }
}

/// Decision procedures for jumping languages.
///
/// `Empty` answers whether `J(a) = ∅`; `Containment` whether `J(a) ⊆ J(b)`;
/// `Universality` whether `J(a) = Σ^ω`.
pub fn jumping_decide(
    problem: DecisionProblem,
    a: &BuchiAutomaton,
    b: Option<&BuchiAutomaton>,
    limits: &Limits,
) -> Result<bool> {
    match problem {
        DecisionProblem::Empty => Ok(buchi_emptiness(a).is_none()),
        DecisionProblem::Containment => {
            let b = second(b, "containment")?;
            a.alphabet().ensure_same(b.alphabet())?;
            masked_inclusion(
                &jumping_parikh(a, limits)?,
                &jumping_parikh(b, limits)?,
                limits,
            )
        }
        DecisionProblem::Equivalence => {
            let b = second(b, "equivalence")?;
            a.alphabet().ensure_same(b.alphabet())?;
            let (pa, pb) = (jumping_parikh(a, limits)?, jumping_parikh(b, limits)?);
            Ok(masked_inclusion(&pa, &pb, limits)? && masked_inclusion(&pb, &pa, limits)?)
        }
        DecisionProblem::Universality => {
            let all = fixtures::universal(&a.alphabet().letters().iter().collect::<String>());
            masked_inclusion(
                &jumping_parikh(&all, limits)?,
                &jumping_parikh(a, limits)?,
                limits,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::{ab_loop, ba_loop, universal};
    use crate::automata::{buchi_accepts, UpWord};
    use crate::jumping::jumping_member_up;

    #[test]
    fn alternations_intersect_when_jumping() {
        let l = Limits::default();
        let i =
            jumping_closure(ClosureKind::Intersection, &ab_loop(), Some(&ba_loop()), &l).unwrap();
        assert!(i.is_deterministic());
        let w = UpWord::parse(";ab", i.alphabet()).unwrap();
        assert!(jumping_member_up(&i, &w, &l).unwrap());
        assert!(buchi_accepts(&i, ";ab").unwrap());
    }

    #[test]
    fn alternation_complement() {
        let l = Limits::default();
        let c = jumping_closure(ClosureKind::Complement, &ab_loop(), None, &l).unwrap();
        let w = |s: &str| UpWord::parse(s, c.alphabet()).unwrap();
        assert!(jumping_member_up(&c, &w(";a"), &l).unwrap());
        assert!(jumping_member_up(&c, &w("aab;b"), &l).unwrap());
        assert!(!jumping_member_up(&c, &w(";ab"), &l).unwrap());
    }

    #[test]
    fn decisions() {
        let l = Limits::default();
        let (a, b) = (ab_loop(), ba_loop());
        assert!(jumping_decide(DecisionProblem::Equivalence, &a, Some(&b), &l).unwrap());
        let u = universal("ab");
        assert!(jumping_decide(DecisionProblem::Universality, &u, None, &l).unwrap());
        assert!(!jumping_decide(DecisionProblem::Universality, &a, None, &l).unwrap());
        let c = jumping_closure(ClosureKind::Complement, &a, None, &l).unwrap();
        assert!(!jumping_decide(DecisionProblem::Containment, &a, Some(&c), &l).unwrap());
        let dead = BuchiAutomaton::new(a.with_sets([0], []));
        assert!(jumping_decide(DecisionProblem::Empty, &dead, None, &l).unwrap());
        assert!(!jumping_decide(DecisionProblem::Empty, &a, None, &l).unwrap());
    }

    #[test]
    fn binary_kinds_need_operand() {
        let l = Limits::default();
        assert!(matches!(
            jumping_closure(ClosureKind::Union, &ab_loop(), None, &l),
            Err(Error::MissingOperand(_))
        ));
    }
}
