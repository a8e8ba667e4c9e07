//! Stable diagnostic code catalog.
//!
//! Code families: `E0xx` lexing/parsing, `E1xx` resolution, `E2xx`
//! architecture and conformance, `E3xx` axioms and instance rules, `W2xx`
//! property schema, `W3xx` cardinality. Every code tied to a rule carries the
//! rule's wording as its anchor so reports read on their own.

use std::fmt;

use crate::validator::RuleId;

use super::Severity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Code {
    E001,
    E002,
    E003,
    E004,
    E101,
    E102,
    E103,
    E104,
    E105,
    E106,
    E201,
    E202,
    E203,
    E211,
    E212,
    E213,
    E214,
    E221,
    E231,
    E232,
    E233,
    E234,
    E301,
    E302,
    E311,
    E312,
    E313,
    W201,
    W202,
    W301,
}

pub struct CodeInfo {
    pub code: Code,
    pub rule: Option<RuleId>,
    pub title: &'static str,
    pub anchor: &'static str,
    pub example: &'static str,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::E001 => "E001",
            Code::E002 => "E002",
            Code::E003 => "E003",
            Code::E004 => "E004",
            Code::E101 => "E101",
            Code::E102 => "E102",
            Code::E103 => "E103",
            Code::E104 => "E104",
            Code::E105 => "E105",
            Code::E106 => "E106",
            Code::E201 => "E201",
            Code::E202 => "E202",
            Code::E203 => "E203",
            Code::E211 => "E211",
            Code::E212 => "E212",
            Code::E213 => "E213",
            Code::E214 => "E214",
            Code::E221 => "E221",
            Code::E231 => "E231",
            Code::E232 => "E232",
            Code::E233 => "E233",
            Code::E234 => "E234",
            Code::E301 => "E301",
            Code::E302 => "E302",
            Code::E311 => "E311",
            Code::E312 => "E312",
            Code::E313 => "E313",
            Code::W201 => "W201",
            Code::W202 => "W202",
            Code::W301 => "W301",
        }
    }

    pub fn parse(s: &str) -> Option<Code> {
        CODES
            .iter()
            .map(|i| i.code)
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
    }

    /// The letter prefix decides the severity class.
    pub fn severity(self) -> Severity {
        if self.as_str().starts_with('W') {
            Severity::Warning
        } else {
            Severity::Error
        }
    }

    pub fn info(self) -> &'static CodeInfo {
        CODES
            .iter()
            .find(|i| i.code == self)
            .expect("every code has a catalog entry")
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

const A1_ANCHOR: &str =
    "A1: \"All Property of a Thing enables only its Powers.\" enables(prop, pow) → partOf(pow, t)";
const A2_ANCHOR: &str = "A2: \"The Power of a Thing only acts upon its Properties.\" actsUpon(pow, prop) → partOf(prop, t)";
const A3_ANCHOR: &str = "A3: \"The Power of a Thing only interacts with other Things.\" partOf(pow, t) → ¬interactsWithOther(pow, t)";

pub static CODES: &[CodeInfo] = &[
    CodeInfo {
        code: Code::E001,
        rule: None,
        title: "invalid character or malformed string literal",
        anchor: "",
        example: "term Pro¢ess   // `¢` cannot appear in an identifier",
    },
    CodeInfo {
        code: Code::E002,
        rule: None,
        title: "unexpected token",
        anchor: "",
        example: "ontology A at CO { term }   // expected an identifier after `term`",
    },
    CodeInfo {
        code: Code::E003,
        rule: None,
        title: "unknown level name",
        anchor: "",
        example: "ontology X at XX { }   // levels are FO, CO, TDO, LDO",
    },
    CodeInfo {
        code: Code::E004,
        rule: None,
        title: "unknown fact predicate in world",
        anchor: "",
        example: "likes(t1, t2)   // predicates: enables, actsUpon, interacts, belongsTo, relatesWith, isSeenAs, defines",
    },
    CodeInfo {
        code: Code::E101,
        rule: None,
        title: "unresolved or ambiguous reference",
        anchor: "",
        example: "term Process enriches ThingFO.Entityy",
    },
    CodeInfo {
        code: Code::E102,
        rule: None,
        title: "duplicate definition",
        anchor: "",
        example: "term Task enriches ThingFO.Thing\nterm Task enriches ThingFO.Thing",
    },
    CodeInfo {
        code: Code::E103,
        rule: None,
        title: "import cycle",
        anchor: "",
        example: "ontology A at CO { imports B }\nontology B at CO { imports A }",
    },
    CodeInfo {
        code: Code::E104,
        rule: None,
        title: "module imports itself",
        anchor: "",
        example: "ontology A at CO { imports A }",
    },
    CodeInfo {
        code: Code::E105,
        rule: None,
        title: "enrichment cycle",
        anchor: "",
        example: "term X enriches A.Y   // where A.Y enriches back to X",
    },
    CodeInfo {
        code: Code::E106,
        rule: None,
        title: "fact argument has the wrong kind",
        anchor: "",
        example: "enables(t1.w1, t1.p1)   // enables takes a property, then a power",
    },
    CodeInfo {
        code: Code::E201,
        rule: Some(RuleId::G2),
        title: "user module at the foundational level",
        anchor: "Guideline #2: \"only one foundational ontology must be found\"",
        example: "ontology MyFO at FO { }   // ThingFO is the only FO ontology",
    },
    CodeInfo {
        code: Code::E202,
        rule: Some(RuleId::R2),
        title: "import crosses levels",
        anchor: "Rule #2: \"Ontologies of the same level –except at the FO level– can be related to each other\"",
        example: "ontology ProcessCO at CO { imports SoftwareTDO }   // SoftwareTDO is at TDO",
    },
    CodeInfo {
        code: Code::E203,
        rule: Some(RuleId::R2),
        title: "import at the foundational level",
        anchor: "\"Ontologies at the same level can be related to each other, except at the foundational level, where only the ThingFO ontology is found.\"",
        example: "ontology ProcessCO at CO { imports ThingFO }",
    },
    CodeInfo {
        code: Code::E211,
        rule: Some(RuleId::R1),
        title: "enrichment target is not exactly one level higher",
        anchor: "Rule #1: \"must guarantee a correspondence of its elements with the elements defined at the immediately higher level\"",
        example: "ontology SoftwareTDO at TDO { term SoftwareProcess enriches ThingFO.Thing }   // skips CO",
    },
    CodeInfo {
        code: Code::E212,
        rule: Some(RuleId::R1),
        title: "relation kind chain does not end at a foundational relationship",
        anchor: "Rule #1: \"This allows the terms and relationships of the lower-level ontologies to be semantically enriched by the terms and relationships of the higher-level ontologies.\"",
        example: "relation develops from A to B kind ProcessCO.Process   // Process is a term, not a relationship",
    },
    CodeInfo {
        code: Code::E213,
        rule: Some(RuleId::R1),
        title: "term has no enrichment link",
        anchor: "Rule #1: \"must guarantee a correspondence of its elements with the elements defined at the immediately higher level\"",
        example: "a term constructed programmatically without `enriches`",
    },
    CodeInfo {
        code: Code::E214,
        rule: Some(RuleId::R1),
        title: "scope facet conflicts with the enrichment chain",
        anchor: "Rule #1: \"must guarantee a correspondence of its elements with the elements defined at the immediately higher level\"",
        example: "term Task enriches ThingFO.Thing scope particulars   // scope applies to Assertion-rooted terms only",
    },
    CodeInfo {
        code: Code::E221,
        rule: Some(RuleId::R2),
        title: "violation that only appears in the joint definition of related same-level modules",
        anchor: "Rule #2: \"it must be guaranteed that their joint definition (as a whole) does not violate the principles of the next higher level\"",
        example: "ontology A at CO { imports B relation r from X to Y kind B.Z }   // B.Z is a term",
    },
    CodeInfo {
        code: Code::E231,
        rule: Some(RuleId::RelConformance),
        title: "relation ends do not match the foundational relationship's domain/range",
        anchor: "Non-taxonomic relationships connect fixed foundational terms, e.g. relates with: \"A Thing relates to other particular Things.\"",
        example: "relation produces from Task to ProductCategory kind ThingFO.relatesWithThing",
    },
    CodeInfo {
        code: Code::E232,
        rule: Some(RuleId::RelConformance),
        title: "belongsTo target is not a Thing Category",
        anchor: "belongs to: \"Particulars Things may belong to none or more Thing Categories.\"",
        example: "belongsTo(t1, ProcessCO.Process)   // Process is Thing-rooted",
    },
    CodeInfo {
        code: Code::E233,
        rule: Some(RuleId::RelConformance),
        title: "defines target is not an Assertion",
        anchor: "defines: \"A Thing defines none or many Assertions.\"",
        example: "defines(t1, ProcessCO.Task)   // Task is Thing-rooted",
    },
    CodeInfo {
        code: Code::E234,
        rule: Some(RuleId::RelConformance),
        title: "thing relates with itself",
        anchor: "relates with: \"A Thing relates to other particular Things.\"",
        example: "relatesWith(t1, t1)",
    },
    CodeInfo {
        code: Code::E301,
        rule: Some(RuleId::R3),
        title: "individual of a Thing Category",
        anchor: "Rule #3: \"At the Instance Ontological Level, only individuals of particular Things can be found.\" Thing Category: \"does not result in instances\"",
        example: "individual c1 : ProcessCO.ProductCategory",
    },
    CodeInfo {
        code: Code::E302,
        rule: Some(RuleId::R3),
        title: "standalone Property or Power individual",
        anchor: "Rule #3: \"At the Instance Ontological Level, only individuals of particular Things can be found.\"",
        example: "individual p1 : ThingFO.Property   // parts only exist inside world things",
    },
    CodeInfo {
        code: Code::E311,
        rule: Some(RuleId::A1),
        title: "property enables a power of another thing",
        anchor: A1_ANCHOR,
        example: "enables(t1.p1, t2.w2)",
    },
    CodeInfo {
        code: Code::E312,
        rule: Some(RuleId::A2),
        title: "power acts upon a property of another thing",
        anchor: A2_ANCHOR,
        example: "actsUpon(t1.w1, t2.p2)",
    },
    CodeInfo {
        code: Code::E313,
        rule: Some(RuleId::A3),
        title: "power interacts with its own thing",
        anchor: A3_ANCHOR,
        example: "interacts(t1.w1, t1)",
    },
    CodeInfo {
        code: Code::W201,
        rule: Some(RuleId::PropConformance),
        title: "attribute not owned by the term's enrichment root",
        anchor: "Properties: Thing {name, description}; Property {name, structural description}; Power {name, behavioral description}; Thing Category {descriptive statement}; Assertion {name, positive statement, specification}",
        example: "term Task enriches ThingFO.Thing { descriptive_statement \"...\" }",
    },
    CodeInfo {
        code: Code::W202,
        rule: Some(RuleId::PropConformance),
        title: "Thing-rooted term without a description",
        anchor: "description: \"An unambiguous textual statement describing a particular Thing.\"",
        example: "term Task enriches ThingFO.Thing",
    },
    CodeInfo {
        code: Code::W301,
        rule: Some(RuleId::Cardinality),
        title: "power acts upon no property",
        anchor: "acts upon: \"A Power acts upon one or more Properties, so it can look at them or update the status of the Thing’s properties.\"",
        example: "thing t1 { power idle; }   // in a world that declares other actsUpon facts",
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for info in CODES {
            assert!(seen.insert(info.code), "duplicate {}", info.code);
            assert_eq!(Code::parse(info.code.as_str()), Some(info.code));
            if info.rule.is_some() {
                assert!(!info.anchor.is_empty(), "{} lacks an anchor", info.code);
            }
        }
        assert_eq!(seen.len(), 30);
    }

    #[test]
    fn severity_follows_prefix() {
        assert_eq!(Code::E311.severity(), Severity::Error);
        assert_eq!(Code::W301.severity(), Severity::Warning);
    }
}
