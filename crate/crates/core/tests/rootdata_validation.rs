//! Catalog-level invariants: constants, duality wiring, lattice bases, and
//! the user-supplied case path.

use weakdual_core::rat::{fmt_q, qi};
use weakdual_core::rootdata::{
    all_cases, c3_auxiliary, case, case_description, case_from_description, load_case, CaseId,
    MAIN_CASES,
};

#[test]
fn catalog_constants_for_the_singular_pairs() {
    let checks = [
        ("ginzburg_auto", "2", "1", "3/2", "3", 6),
        ("ginzburg_dual", "2", "1", "3/2", "3", 6),
        ("garrett_auto", "3/2", "2", "0", "4", 7),
        ("garrett_dual", "3/2", "2", "0", "4", 7),
    ];
    for (name, a, gamma, gimel, eps, dgu) in checks {
        let cd = load_case(name).unwrap();
        let c = cd.derived_constants().unwrap();
        assert_eq!(fmt_q(&c.a), a, "{name} a");
        assert_eq!(fmt_q(&c.gamma), gamma, "{name} gamma");
        assert_eq!(fmt_q(&c.gimel), gimel, "{name} gimel");
        assert_eq!(fmt_q(&c.epsilon), eps, "{name} epsilon");
        assert_eq!(c.dim_g_mod_u, dgu, "{name} dim G/U");
        assert_eq!(c.discrepancy_exponent, qi(3), "{name} discrepancy");
        assert_eq!(c.eigenform_power, qi(2) * &c.a - qi(1));
    }
}

#[test]
fn epsilon_and_gimel_algebra() {
    for id in MAIN_CASES {
        let c = case(id).derived_constants().unwrap();
        // gimel = (2a-1)(2a-3)/(2a-2), epsilon = (2a-1)/(a-1).
        let two_a = qi(2) * &c.a;
        assert_eq!(c.gimel, (&two_a - qi(1)) * (&two_a - qi(3)) / (&two_a - qi(2)));
        assert_eq!(c.epsilon, (&two_a - qi(1)) / (&c.a - qi(1)));
        assert_eq!(
            c.discrepancy_exponent,
            qi(c.dim_g_mod_u as i64) - (&two_a - qi(1)) * &c.gamma
        );
    }
}

#[test]
fn rho_pairs_to_a_with_rho_check() {
    for id in MAIN_CASES {
        let cd = case(id);
        let c = cd.derived_constants().unwrap();
        assert_eq!(cd.pair(&cd.rho, &cd.rho_check), c.a, "{}", cd.name);
    }
}

#[test]
fn duality_links_are_mutual() {
    for (a, b) in [("ginzburg_auto", "ginzburg_dual"), ("garrett_auto", "garrett_dual")] {
        let ca = load_case(a).unwrap();
        let cb = load_case(b).unwrap();
        assert_eq!(ca.dual().unwrap().name, b);
        assert_eq!(cb.dual().unwrap().name, a);
    }
    for name in ["gl1", "gl2", "gl3", "sl2"] {
        assert!(load_case(name).unwrap().dual().is_err(), "{name} has no catalog dual");
    }
}

#[test]
fn lci_presentations_have_matching_codimension() {
    for (name, invariants) in [("ginzburg_auto", 2usize), ("garrett_auto", 1usize)] {
        let cd = load_case(name).unwrap();
        let lci = cd.lci.as_ref().expect("complete intersection data");
        assert_eq!(lci.invariants.len(), invariants);
        assert_eq!(lci.ambient.len(), cd.cone_dim.unwrap() + lci.invariants.len());
    }
    for name in ["ginzburg_dual", "garrett_dual"] {
        let cd = load_case(name).unwrap();
        assert!(cd.lci.is_none(), "{name} is not a complete intersection");
        assert!(cd.cone_dim.is_some());
    }
}

#[test]
fn cone_dimensions() {
    assert_eq!(load_case("ginzburg_auto").unwrap().cone_dim, Some(6));
    assert_eq!(load_case("ginzburg_dual").unwrap().cone_dim, Some(6));
    assert_eq!(load_case("garrett_auto").unwrap().cone_dim, Some(7));
    assert_eq!(load_case("garrett_dual").unwrap().cone_dim, Some(7));
    assert_eq!(load_case("gl2").unwrap().cone_dim, None);
}

#[test]
fn auxiliary_c3_case() {
    let c3 = c3_auxiliary();
    let c = c3.derived_constants().unwrap();
    assert_eq!(c.dim_u, 9);
    assert_eq!(c.dim_g_mod_u, 21 - 9);
    // <rho, rho_check> for C3: (3,2,1).(5/2,3/2,1/2) = 11.
    assert_eq!(c.a, qi(11));
}

#[test]
fn minus_w0_is_an_involution_on_fundamentals() {
    for cd in all_cases() {
        for omega in &cd.fundamental_like {
            let twice = cd.apply_minus_w0(&cd.apply_minus_w0(omega));
            assert_eq!(&twice, omega, "{}", cd.name);
        }
        // -w0 fixes rho and permutes the simple roots.
        assert_eq!(cd.apply_minus_w0(&cd.rho), cd.rho, "{}", cd.name);
        for alpha in &cd.simple_roots {
            let image = cd.apply_minus_w0(alpha);
            assert!(
                cd.simple_roots.contains(&image),
                "{}: -w0 of a simple root must be simple",
                cd.name
            );
        }
    }
}

#[test]
fn description_roundtrip_preserves_validation() {
    for id in MAIN_CASES {
        let cd = case(id);
        let desc = case_description(cd);
        let rebuilt = case_from_description(&desc).unwrap();
        assert_eq!(rebuilt.rank, cd.rank);
        assert_eq!(rebuilt.rho, cd.rho);
        assert_eq!(rebuilt.simple_roots, cd.simple_roots);
        let c0 = cd.derived_constants().unwrap();
        let c1 = rebuilt.derived_constants().unwrap();
        assert_eq!(c0.a, c1.a);
        assert_eq!(c0.discrepancy_exponent, c1.discrepancy_exponent);
    }
}

#[test]
fn unknown_case_is_an_error() {
    assert!(load_case("so5").is_err());
    assert!(CaseId::parse("nonsense").is_err());
}
