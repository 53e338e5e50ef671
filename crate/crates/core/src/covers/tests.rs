use super::*;
use crate::construct::{canonical_arc_group, canonical_cover_subgroup, family, Family, Params};
use crate::symmetry::{automorphism_group, AutResult};

fn graph(f: Family, m: u64, p: u64, e: u32) -> crate::construct::FamilyInstance {
    family(f, Params { m, p, e }).unwrap()
}

#[test]
fn trivial_quotient_is_the_graph() {
    let g = graph(Family::Cd, 11, 0, 0).graph;
    let q = quotient(&g, &PermGroup::trivial(22)).unwrap();
    assert_eq!(q.graph, g);
    assert_eq!(q.projection, (0..22).collect::<Vec<_>>());
}

#[test]
fn non_automorphisms_are_rejected() {
    let g = Graph::cycle(6);
    let bad = PermGroup::new(6, vec![Perm::from_cycles(6, &[&[0, 2]]).unwrap()]).unwrap();
    assert!(matches!(quotient(&g, &bad), Err(CoverError::NotAutomorphism { index: 0 })));
}

#[test]
fn k6_has_no_pentavalent_quotient() {
    let k6 = Graph::complete(6);
    let k = PermGroup::new(6, vec![Perm::from_cycles(6, &[&[0, 1], &[2, 3], &[4, 5]]).unwrap()]).unwrap();
    let r = verify_regular_cover(&k6, &k, &k6).unwrap();
    assert!(r.semiregular);
    assert!(!r.valency_preserved && !r.checks_passed);
    assert_eq!(r.orbit_count, 3);
}

/// Kernels of order `|V|/6` whose quotient is `K_6` with an arc-transitive
/// fibre-preserving group.
fn k6_kernels(f: Family) -> (crate::construct::FamilyInstance, AutResult, Vec<CoverKernel>) {
    let inst = graph(f, 0, 0, 0);
    let aut = automorphism_group(&inst.graph).unwrap();
    let k6 = Graph::complete(6);
    let kernels = cover_kernels(&inst.graph, &aut, inst.graph.vertex_count() / 6)
        .unwrap()
        .into_iter()
        .filter(|k| {
            k.normalizer_arc_transitive && verify_regular_cover(&inst.graph, &k.group, &k6).unwrap().checks_passed
        })
        .collect();
    (inst, aut, kernels)
}

#[test]
fn sporadic_dihedral_covers_of_k6() {
    let k6 = Graph::complete(6);
    for (f, label) in [(Family::I12Double, "D2"), (Family::G60, "D5"), (Family::G120, "D10")] {
        let (inst, aut, kernels) = k6_kernels(f);
        let k = kernels.iter().find(|k| k.normal_in_aut).unwrap_or_else(|| panic!("{f}"));
        assert_eq!(k.label, Some(label), "{f}");
        assert!(k.is_dihedral());
        let r = verify_symmetric_cover(&inst.graph, &k.group, &k6, FibreGroup::Enumerate(&aut)).unwrap();
        assert!(r.checks_passed, "{f}: {r:?}");
        assert_eq!(r.fibre_group_order, Some(aut.order), "{f}");
    }
}

#[test]
fn g48_covers_k6_with_quaternion_fibre() {
    let (inst, aut, kernels) = k6_kernels(Family::G48);
    assert_eq!(kernels.len(), 1);
    let k = &kernels[0];
    assert_eq!(k.label, Some("Q8"));
    assert!(!k.is_dihedral() && k.normal_in_aut);
    let r = verify_symmetric_cover(&inst.graph, &k.group, &Graph::complete(6), FibreGroup::Enumerate(&aut)).unwrap();
    assert!(r.checks_passed, "{r:?}");
    // no D_4 even gives a pentavalent quotient
    let d4: Vec<_> = cover_kernels(&inst.graph, &aut, 8).unwrap().into_iter().filter(|k| k.label == Some("D4")).collect();
    assert!(!d4.is_empty());
    for k in d4 {
        assert!(!verify_regular_cover(&inst.graph, &k.group, &Graph::complete(6)).unwrap().valency_preserved);
    }
}

#[test]
fn canonical_subgroups_give_covers_of_order_2p() {
    for (f, m, p, e, base) in [
        (Family::Cgd1, 1, 11, 2, graph(Family::Cd, 11, 0, 0).graph),
        (Family::Cgd4, 1, 5, 1, Graph::complete_bipartite(5, 5)),
        (Family::Cgd5, 1, 11, 1, graph(Family::Cd, 11, 0, 0).graph),
    ] {
        let inst = graph(f, m, p, e);
        let n = canonical_cover_subgroup(&inst).unwrap();
        let arc = canonical_arc_group(&inst).unwrap();
        let fibre = FibreGroup::Supplied { group: &arc.group, order: Some(arc.order) };
        let r = verify_symmetric_cover(&inst.graph, &n.group, &base, fibre).unwrap();
        assert!(r.checks_passed, "{}: {r:?}", inst.label());
        assert_eq!(r.quotient_order, 2 * p as usize);
        // a valency-preserving quotient with at least three orbits forces semiregularity
        assert!(!(r.valency_preserved && r.orbit_count >= 3) || r.semiregular);
    }
}

#[test]
fn cd55_covers_cd11() {
    let inst = graph(Family::Cd, 55, 0, 0);
    let k = canonical_cover_subgroup(&inst).unwrap();
    let aut = automorphism_group(&inst.graph).unwrap();
    let base = graph(Family::Cd, 11, 0, 0).graph;
    let r = verify_symmetric_cover(&inst.graph, &k.group, &base, FibreGroup::Enumerate(&aut)).unwrap();
    assert!(r.checks_passed, "{r:?}");
    assert_eq!((r.kernel_order, r.quotient_order), (5, 22));
    let json = serde_json::to_value(&r).unwrap();
    for key in [
        "semiregular",
        "orbit_count",
        "valency_preserved",
        "quotient_order",
        "iso_to_base",
        "fibre_group_order",
        "fibre_arc_transitive",
        "checks_passed",
    ] {
        assert!(json.get(key).is_some(), "{key}");
    }
}
