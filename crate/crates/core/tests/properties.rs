mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use ontoarch::cli::check_sources;
use ontoarch::metamodel::ScopeFacet;
use ontoarch::model::{
    Attribute, Fact, GroundWorld, Import, Individual, InstanceFile, InstanceItem, Level,
    ModuleItem, OntologyModule, PartDecl, PowerIdx, Predicate, PropertyIdx, QualifiedRef,
    RelationDecl, TermDef, ThingIdx, ThingNode, World,
};
use ontoarch::parser::{is_keyword, parse_source, render_file, FileAst, FileItem, SourceSpan};
use ontoarch::reporting::render_json;
use ontoarch::validator::{check_axioms, oracle_check_axioms, Violation};

use common::{corpus, fixture, mutate};

fn ident() -> impl Strategy<Value = String> {
    "[a-zA-Z][a-zA-Z0-9_]{0,6}".prop_filter("keywords are reserved", |s| !is_keyword(s))
}

fn qref() -> impl Strategy<Value = QualifiedRef> {
    (proptest::option::of(ident()), ident()).prop_map(|(q, n)| QualifiedRef::new(q.as_deref(), &n))
}

fn term() -> impl Strategy<Value = TermDef> {
    let attr = (ident(), "[ a-zA-Z0-9.,\"\\\\]{0,12}").prop_map(|(key, value)| Attribute {
        key,
        value,
        span: SourceSpan::default(),
    });
    (
        ident(),
        qref(),
        proptest::option::of(prop_oneof![
            Just(ScopeFacet::Particulars),
            Just(ScopeFacet::Universals)
        ]),
        proptest::collection::vec(attr, 0..3),
    )
        .prop_map(|(name, target, scope, attributes)| TermDef {
            name,
            enriches: Some(target),
            scope,
            attributes,
            span: SourceSpan::default(),
        })
}

fn relation() -> impl Strategy<Value = RelationDecl> {
    (ident(), qref(), qref(), qref()).prop_map(|(name, from, to, kind)| RelationDecl {
        name,
        from,
        to,
        kind,
        span: SourceSpan::default(),
    })
}

fn module() -> impl Strategy<Value = OntologyModule> {
    let item = prop_oneof![
        term().prop_map(ModuleItem::Term),
        relation().prop_map(ModuleItem::Relation)
    ];
    let level = prop_oneof![
        Just(Level::FO),
        Just(Level::CO),
        Just(Level::TDO),
        Just(Level::LDO)
    ];
    (
        ident(),
        level,
        proptest::collection::vec(ident(), 0..3),
        proptest::collection::vec(item, 0..5),
    )
        .prop_map(|(name, level, imports, items)| OntologyModule {
            name,
            level,
            imports: imports
                .into_iter()
                .map(|module| Import {
                    module,
                    span: SourceSpan::default(),
                })
                .collect(),
            items,
            span: SourceSpan::default(),
        })
}

fn part() -> impl Strategy<Value = PartDecl> {
    ident().prop_map(|name| PartDecl {
        name,
        span: SourceSpan::default(),
    })
}

fn world() -> impl Strategy<Value = World> {
    let thing = (
        ident(),
        proptest::option::of(qref()),
        proptest::collection::vec(part(), 0..3),
        proptest::collection::vec(part(), 0..3),
    )
        .prop_map(|(id, instance_of, properties, powers)| ThingNode {
            id,
            instance_of,
            properties,
            powers,
            span: SourceSpan::default(),
        });
    let fact = (
        proptest::sample::select(Predicate::ALL.to_vec()),
        qref(),
        qref(),
    )
        .prop_map(|(predicate, subject, object)| Fact {
            predicate,
            subject,
            object,
            span: SourceSpan::default(),
        });
    (
        ident(),
        proptest::collection::vec(thing, 0..3),
        proptest::collection::vec(fact, 0..4),
    )
        .prop_map(|(name, things, facts)| World {
            name,
            things,
            facts,
            span: SourceSpan::default(),
        })
}

fn instances() -> impl Strategy<Value = InstanceFile> {
    let individual = (ident(), qref()).prop_map(|(name, ty)| {
        InstanceItem::Individual(Individual {
            name,
            ty,
            span: SourceSpan::default(),
        })
    });
    let item = prop_oneof![individual, world().prop_map(InstanceItem::World)];
    (ident(), proptest::collection::vec(item, 0..4)).prop_map(|(of_module, items)| InstanceFile {
        of_module,
        of_span: SourceSpan::default(),
        items,
        span: SourceSpan::default(),
    })
}

fn file_ast() -> impl Strategy<Value = FileAst> {
    let item = prop_oneof![
        module().prop_map(FileItem::Module),
        instances().prop_map(FileItem::Instances)
    ];
    proptest::collection::vec(item, 1..4).prop_map(|items| FileAst {
        path: "gen.onto".to_string(),
        items,
    })
}

/// A world of up to three things with up to two properties and two powers
/// each, plus an arbitrary subset of the well-typed edges.
fn ground_world() -> impl Strategy<Value = GroundWorld> {
    let shape = proptest::collection::vec((0..=2usize, 0..=2usize), 1..=3);
    (shape, proptest::collection::vec(any::<bool>(), 108)).prop_map(|(shape, picks)| {
        let mut w = GroundWorld::new("w");
        for (i, (np, nw)) in shape.iter().enumerate() {
            let t = w.add_thing(format!("t{i}"));
            for j in 0..*np {
                w.add_property(t, format!("p{j}"));
            }
            for j in 0..*nw {
                w.add_power(t, format!("w{j}"));
            }
        }
        let props: Vec<_> = (0..w.properties.len()).map(PropertyIdx).collect();
        let powers: Vec<_> = (0..w.powers.len()).map(PowerIdx).collect();
        let things: Vec<_> = (0..w.things.len()).map(ThingIdx).collect();
        let mut pick = picks.into_iter().cycle();
        for &p in &props {
            for &q in &powers {
                if pick.next().unwrap() {
                    w.enable(p, q);
                }
                if pick.next().unwrap() {
                    w.act_upon(q, p);
                }
            }
        }
        for &q in &powers {
            for &t in &things {
                if pick.next().unwrap() {
                    w.interact(q, t);
                }
            }
        }
        w
    })
}

fn as_set(v: Vec<Violation>) -> BTreeSet<Violation> {
    v.into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_then_parse_is_identity(ast in file_ast()) {
        let text = render_file(&ast);
        let (parsed, diags) = parse_source("gen.onto", &text);
        prop_assert!(diags.is_empty(), "{diags:?}\n{text}");
        let parsed = parsed.unwrap();
        prop_assert_eq!(parsed.without_spans(), ast.without_spans());
        prop_assert_eq!(render_file(&parsed), text);
    }

    #[test]
    fn checker_agrees_with_oracle(w in ground_world()) {
        let fast = check_axioms(&w);
        prop_assert_eq!(as_set(fast.clone()), as_set(oracle_check_axioms(&w)));
        prop_assert_eq!(fast, oracle_check_axioms(&w));
    }

    #[test]
    fn adding_an_edge_keeps_violations(w in ground_world(), a in any::<usize>(), b in any::<usize>(), kind in 0..3u8) {
        let before = as_set(check_axioms(&w));
        let mut more = w.clone();
        let (np, nw, nt) = (w.properties.len(), w.powers.len(), w.things.len());
        match kind {
            0 if np > 0 && nw > 0 => more.enable(PropertyIdx(a % np), PowerIdx(b % nw)),
            1 if np > 0 && nw > 0 => more.act_upon(PowerIdx(b % nw), PropertyIdx(a % np)),
            2 if nw > 0 => more.interact(PowerIdx(b % nw), ThingIdx(a % nt)),
            _ => {}
        }
        let after = as_set(check_axioms(&more));
        prop_assert!(before.is_subset(&after));
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,200}") {
        let _ = parse_source("any.onto", &text);
    }

    #[test]
    fn parser_survives_token_soup(words in proptest::collection::vec(prop_oneof![
        Just("ontology"), Just("at"), Just("CO"), Just("{"), Just("}"), Just("term"),
        Just("enriches"), Just("ThingFO.Thing"), Just("relation"), Just("from"), Just("to"),
        Just("kind"), Just("instances"), Just("of"), Just("world"), Just("thing"), Just(":"),
        Just("("), Just(")"), Just(","), Just("x"), Just("\"s\""), Just("imports"), Just(";"),
        Just("individual"), Just("enables"), Just("property"), Just("power"), Just("scope"),
    ], 0..60)) {
        let text = words.join(" ");
        let (ast, diags) = parse_source("soup.onto", &text);
        prop_assert_eq!(ast.is_some(), diags.is_empty());
    }

    #[test]
    fn report_ignores_input_order(order in Just((0..corpus().len()).collect::<Vec<_>>()).prop_shuffle()) {
        let files = corpus();
        let shuffled: Vec<_> = order.iter().map(|&i| files[i].clone()).collect();
        prop_assert_eq!(render_json(&check_sources(&shuffled)), render_json(&check_sources(&files)));
    }
}

const EDITS: &[(&str, &str, &str)] = &[
    (
        "SoftwareTDO.onto",
        "term SoftwareProcess enriches ProcessCO.Process",
        "term SoftwareProcess enriches ThingFO.Thing",
    ),
    (
        "ProcessCO.onto",
        "from Task to WorkProduct",
        "from Task to ProductCategory",
    ),
    (
        "TestingIO.onto",
        "belongsTo(loginSuite, TestCategory)",
        "belongsTo(loginSuite, TestCase)",
    ),
    (
        "TestingIO.onto",
        "individual loginCase : TestCase",
        "individual loginCase : TestCategory",
    ),
    (
        "TestingIO.onto",
        "enables(alice.skill, alice.execute)",
        "enables(alice.skill, loginSuite.run)",
    ),
    (
        "TestingIO.onto",
        "interacts(alice.execute, loginSuite)",
        "interacts(alice.execute, alice)",
    ),
    (
        "TestingLDO.onto",
        "kind SoftwareTDO.develops",
        "kind SoftwareTDO.SoftwareProcess",
    ),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn diagnostics_are_sorted(mask in 0u32..(1 << EDITS.len()), order in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let mut files = fixture("fig2");
        for (i, (file, from, to)) in EDITS.iter().enumerate() {
            if mask & (1 << i) != 0 {
                files = mutate(&files, file, from, to);
            }
        }
        let report = check_sources(&files);
        let shuffled: Vec<_> = order.iter().map(|&i| files[i].clone()).collect();
        prop_assert_eq!(&check_sources(&shuffled), &report);
        let keys: Vec<_> = report
            .diagnostics()
            .iter()
            .map(|d| (d.span.file.clone(), d.span.start_line, d.span.start_col, !d.is_error(), d.code))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        prop_assert_eq!(keys, sorted);
        prop_assert_eq!(report.errors() == 0, mask == 0);
    }
}
