mod common;

use ontoarch::cli::check_sources;
use ontoarch::model::GroundWorld;
use ontoarch::reporting::Code;
use ontoarch::validator::{
    check_architecture, check_axioms, check_property_conformance, check_relationship_conformance,
    check_rule1, check_rule2, check_rule3, oracle_check_axioms, validate_suite, RuleId, Witness,
};

use common::{fixture, resolved};

fn src(files: &[(&str, &str)]) -> Vec<(String, String)> {
    files
        .iter()
        .map(|(n, t)| (n.to_string(), t.to_string()))
        .collect()
}

fn codes(files: &[(&str, &str)]) -> Vec<Code> {
    check_sources(&src(files)).codes()
}

const PROCESS: &str = r#"
ontology ProcessCO at CO {
  term Process enriches ThingFO.Thing {
    description "A set of related tasks."
  }
  term ProductCategory enriches ThingFO.ThingCategory {
    descriptive_statement "A kind of work product."
  }
}
"#;

#[test]
fn architecture_examples() {
    let only_co = resolved(&src(&[("p.onto", PROCESS)]));
    assert!(check_architecture(&only_co).is_empty());

    let my_fo = resolved(&src(&[("fo.onto", "ontology MyFO at FO {\n}\n")]));
    let v = check_architecture(&my_fo);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].code, Code::E201);
    assert_eq!(v[0].rule, RuleId::G2);

    let cross = resolved(&src(&[
        ("a.onto", "ontology A at CO {\n  imports B\n}\n"),
        ("b.onto", "ontology B at TDO {\n}\n"),
    ]));
    let v = check_architecture(&cross);
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::E202]
    );
}

#[test]
fn rule1_examples() {
    let suite = resolved(&src(&[("p.onto", PROCESS)]));
    assert!(check_rule1(&suite).is_empty());

    let skip = src(&[
        ("p.onto", PROCESS),
        (
            "t.onto",
            "ontology SoftTDO at TDO {\n  term Soft enriches ThingFO.Thing {\n    description \"x\"\n  }\n}\n",
        ),
    ]);
    let v = check_rule1(&resolved(&skip));
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::E211]
    );

    let chain = src(&[(
        "p.onto",
        "ontology P at CO {\n  term A enriches ThingFO.Thing\n  relation r from A to A kind ThingFO.relatesWithThing\n}\n",
    ), (
        "q.onto",
        "ontology Q at TDO {\n  term B enriches P.A\n  relation s from B to B kind P.r\n}\n",
    )]);
    assert!(check_rule1(&resolved(&chain)).is_empty());
}

#[test]
fn rule2_examples() {
    let fig2 = resolved(&fixture("fig2"));
    assert!(check_rule2(&fig2).is_empty());

    let joint = resolved(&fixture("joint"));
    let v = check_rule2(&joint);
    assert_eq!(v.len(), 3);
    for violation in &v {
        assert_eq!(violation.code, Code::E221);
        match &violation.witness {
            Witness::Joint { modules, .. } => {
                assert_eq!(
                    modules,
                    &vec!["PlanningCO".to_string(), "ScheduleCO".to_string()]
                )
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }
    // Each module on its own is fine.
    for name in ["PlanningCO", "ScheduleCO"] {
        let id = joint.module_by_name(name).unwrap();
        assert!(ontoarch::validator::check_rule1_for(&joint, id).is_empty());
    }
}

#[test]
fn rule3_examples() {
    let base = |ty: &str| {
        src(&[
            ("p.onto", PROCESS),
            (
                "g.onto",
                "ontology GoalOntology at CO {\n  term Goal enriches ThingFO.IntentionAssertion {\n    positive_statement \"g\"\n  }\n}\n",
            ),
            ("i.onto", &format!("instances of ProcessCO {{\n  individual x : {ty}\n}}\n")),
        ])
    };
    assert!(check_rule3(&resolved(&base("ProcessCO.Process"))).is_empty());
    let v = check_rule3(&resolved(&base("ProcessCO.ProductCategory")));
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::E301]
    );
    assert!(check_rule3(&resolved(&base("GoalOntology.Goal"))).is_empty());
}

#[test]
fn axiom_examples() {
    let mut w = GroundWorld::new("w");
    let t1 = w.add_thing("t1");
    let t2 = w.add_thing("t2");
    let p1 = w.add_property(t1, "p1");
    let w1 = w.add_power(t1, "w1");
    w.enable(p1, w1);
    w.act_upon(w1, p1);
    w.interact(w1, t2);
    assert!(check_axioms(&w).is_empty());
    assert!(oracle_check_axioms(&w).is_empty());

    let w2 = w.add_power(t2, "w2");
    let mut cross = w.clone();
    cross.enable(p1, w2);
    let v = check_axioms(&cross);
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::E311]
    );
    match &v[0].witness {
        Witness::Edge {
            from_owner,
            to_owner,
            ..
        } => {
            assert_eq!((from_owner.as_str(), to_owner.as_str()), ("t1", "t2"))
        }
        other => panic!("unexpected witness {other:?}"),
    }

    let mut selfish = w.clone();
    selfish.interact(w1, t1);
    let v = check_axioms(&selfish);
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::E313]
    );

    assert!(check_axioms(&GroundWorld::new("empty")).is_empty());
    let mut single = GroundWorld::new("single");
    let t = single.add_thing("t");
    single.add_property(t, "p");
    single.add_power(t, "q");
    assert!(oracle_check_axioms(&single).is_empty());
}

#[test]
fn relationship_conformance_examples() {
    let suite = src(&[(
        "s.onto",
        "ontology S at CO {\n  term G enriches ThingFO.AssertionOnUniversals\n  term P enriches ThingFO.AssertionOnParticulars\n  relation abstracts from G to P kind ThingFO.generalizes\n}\n",
    )]);
    assert!(check_relationship_conformance(&resolved(&suite)).is_empty());

    let world = |fact: &str| {
        src(&[
            ("p.onto", PROCESS),
            (
                "i.onto",
                &format!("instances of ProcessCO {{\n  world w {{\n    thing t1 : Process {{}}\n    thing t2 : Process {{}}\n    {fact}\n  }}\n}}\n"),
            ),
        ])
    };
    let v = check_relationship_conformance(&resolved(&world("belongsTo(t1, ProcessCO.Process)")));
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::E232]
    );
    let v = check_relationship_conformance(&resolved(&world("relatesWith(t1, t1)")));
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::E234]
    );
    assert!(
        check_relationship_conformance(&resolved(&world("belongsTo(t1, ProductCategory)")))
            .is_empty()
    );
}

#[test]
fn property_conformance_examples() {
    let suite = |body: &str| src(&[("s.onto", &format!("ontology S at CO {{\n{body}\n}}\n"))]);
    let v = check_property_conformance(&resolved(&suite(
        "  term T enriches ThingFO.Thing {\n    description \"d\"\n    descriptive_statement \"x\"\n  }",
    )));
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::W201]
    );

    let v = check_property_conformance(&resolved(&suite(
        "  term A enriches ThingFO.Assertion {\n    positive_statement \"p\"\n    specification \"s\"\n  }",
    )));
    assert!(v.is_empty());

    let v = check_property_conformance(&resolved(&suite("  term T enriches ThingFO.Thing")));
    assert_eq!(
        v.iter().map(|v| v.code).collect::<Vec<_>>(),
        vec![Code::W202]
    );
}

#[test]
fn no_user_fo_module_means_no_e201() {
    for dir in ["fig2", "joint", "goals"] {
        let v = validate_suite(&resolved(&fixture(dir)));
        assert!(v.iter().all(|v| v.code != Code::E201));
    }
}

#[test]
fn empty_suite_is_clean() {
    assert!(codes(&[]).is_empty());
}

#[test]
fn goals_fixture_warnings() {
    let report = check_sources(&fixture("goals"));
    assert_eq!(report.errors(), 0);
    let mut got = report.codes();
    got.sort();
    assert_eq!(got, vec![Code::W201, Code::W202, Code::W301]);
}

#[test]
fn violations_are_sorted_and_carry_anchors() {
    let v = validate_suite(&resolved(&common::corpus()));
    let mut sorted = v.clone();
    sorted.sort();
    assert_eq!(v, sorted);
    for violation in v {
        let d = violation.to_diagnostic();
        if d.rule.is_some() {
            assert!(!d.anchor.is_empty(), "{} has no anchor", d.code);
        }
    }
}
