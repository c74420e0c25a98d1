mod common;

use annihilator::families::{
    c3_plus_singletons, c5_two_chords_plus_singleton, chorded_cycle_star,
    chorded_cycle_star_witness, odd_cycle_plus_odd_path, FAMILIES,
};
use annihilator::lab::{check_conjecture34, check_corollary3, check_only_if, Status};
use annihilator::{build_family, full_report, FamilyInstance};

use common::{brute_alpha, brute_annihilation, brute_critical, brute_matching};

/// Every predicted value against the brute-force oracles.
fn assert_predictions(family: &FamilyInstance) {
    let g = &family.graph;
    let p = &family.predicted;
    if let Some(n) = p.n {
        assert_eq!(g.n(), n, "{}", family.name);
    }
    if let Some(alpha) = p.alpha {
        assert_eq!(brute_alpha(g), alpha, "{} alpha", family.name);
    }
    if let Some(a) = p.annihilation {
        assert_eq!(brute_annihilation(g), a, "{} a", family.name);
    }
    if let Some(alpha_crit) = p.alpha_crit {
        assert_eq!(brute_critical(g).1, alpha_crit, "{} alpha'", family.name);
    }
    if let Some(mu) = p.mu {
        assert_eq!(brute_matching(g), mu, "{} mu", family.name);
    }
    if let Some(ke) = p.koenig_egervary {
        assert_eq!(
            brute_alpha(g) + brute_matching(g) == g.n(),
            ke,
            "{} KE",
            family.name
        );
    }
    if let Some(degrees) = &p.degree_sequence {
        assert_eq!(&g.degree_sequence(), degrees, "{}", family.name);
    }
    assert!(p.compare(&full_report(g)).is_empty(), "{}", family.name);
}

#[test]
fn small_members_match_oracles() {
    for t in 1..=6 {
        assert_predictions(&c3_plus_singletons(t).unwrap());
    }
    assert_predictions(&c5_two_chords_plus_singleton());
    for k in 2..=7 {
        assert_predictions(&chorded_cycle_star(k).unwrap());
    }
    for k in 1..=3 {
        for l in 1..=3 {
            if 2 * k + 2 * l + 2 <= 18 {
                assert_predictions(&odd_cycle_plus_odd_path(k, l).unwrap());
            }
        }
    }
}

#[test]
fn witness_sets_are_independent() {
    for k in 2..=60 {
        let g = chorded_cycle_star(k).unwrap().graph;
        let witness = chorded_cycle_star_witness(k).unwrap();
        assert_eq!(witness.len(), k + 2, "k = {k}");
        assert!(g.is_independent(&witness), "k = {k}");
    }
}

#[test]
fn every_member_breaks_the_only_if_direction() {
    let mut members: Vec<FamilyInstance> =
        (1..=8).map(|t| c3_plus_singletons(t).unwrap()).collect();
    members.push(c5_two_chords_plus_singleton());
    members.extend((2..=12).map(|k| chorded_cycle_star(k).unwrap()));
    for family in &members {
        let verdict = check_only_if(&family.graph).unwrap();
        assert_eq!(
            verdict.status,
            Status::Violated,
            "{} {:?}",
            family.name,
            family.parameters
        );
    }
}

#[test]
fn chorded_cycle_star_breaks_the_koenig_egervary_characterization() {
    for k in 2..=6 {
        let g = chorded_cycle_star(k).unwrap().graph;
        let (forward, backward) = check_corollary3(&g).unwrap();
        assert_eq!(forward.status, Status::Violated);
        assert_eq!(backward.status, Status::NotApplicable);
        assert_eq!(check_conjecture34(&g).unwrap().status, Status::Violated);
    }
}

#[test]
fn registry_builds_every_family() {
    for (name, params) in FAMILIES {
        let values: Vec<usize> = params.iter().map(|_| 2).collect();
        let family = build_family(name, &values).unwrap();
        assert_eq!(family.name, *name);
    }
}
