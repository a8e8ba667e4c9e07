use super::{
    AxiomId, CardinalitySeverity, Multiplicity, PropertySpec, RelationshipId, RelationshipSpec,
    TermId, TermSpec,
};

const fn aspect(
    id: TermId,
    display_name: &'static str,
    definition: &'static str,
    notes: &'static [&'static str],
) -> TermSpec {
    TermSpec {
        id,
        parent: Some(TermId::Assertion),
        display_name,
        synonyms: &[],
        definition,
        notes,
    }
}

const UNBOUNDED: Option<Multiplicity> = Some(Multiplicity { min: 0, max: None });

pub static TERM_SPECS: [TermSpec; 19] = [
    TermSpec {
        id: TermId::Thing,
        parent: None,
        display_name: "Thing",
        synonyms: &["Particular Thing", "Object", "Entity", "Instance", "Individual"],
        definition: "Class or type of a perceivable or conceivable object, or its individuals of a given particular world.",
        notes: &[
            "A Thing as a class represents and implies unique individuals or instances, not a universal category. Therefore, a particular Thing results in instances, whereas a universal Thing (i.e., a Thing Category) does not result in instances, at least with the valuable meaning of individual in a given particular world.",
            "A Thing is not a particular Thing without its Properties and its Powers, so “things, properties and powers all emerge simultaneously to form a unity” ... “Things, properties and powers are necessary and sufficient for the existence of this unity”.",
            "A Thing cannot exist or be in spatiotemporal isolation from other Things in a given particular world. In other words, a target Thing is always surrounded by other context Things, in any particular situation.",
            "In contrast to a particular Thing, that is, a particular class or subclass, the individuals of a class or subclass are not instantiated by further entities.",
            "A subclass of a particular Thing as a particular class can be represented at any lower level of the ontological architecture except at the Instance Ontological Level, where only particular individuals are or exist.",
        ],
    },
    TermSpec {
        id: TermId::Property,
        parent: None,
        display_name: "Property",
        synonyms: &[],
        definition: "It refers to the intrinsic constitution, structure, or parts of a particular Thing.",
        notes: &[
            "A Property is one member of the triad that conforms the unique identity named Thing.",
            "A Property, which is one member of the triad that conforms a particular Thing can be seen as another particular Thing in another situation with its own Properties and Powers.",
        ],
    },
    TermSpec {
        id: TermId::Power,
        parent: None,
        display_name: "Power",
        synonyms: &[],
        definition: "It refers to what a particular Thing does, can do or behave.",
        notes: &[
            "A Power is one member of the triad that conforms the unique identity named Thing.",
            "“Powers are the way of acting of a things’ properties; powers are a things’ properties in action”. Also, “Things have properties, these properties instantiate [...] acting powers, and this ensemble of things, properties and powers cause any events that might occur”.",
        ],
    },
    TermSpec {
        id: TermId::ThingCategory,
        parent: None,
        display_name: "Thing Category",
        synonyms: &["Entity Category", "Universal Thing"],
        definition: "Class or type that represents a category that predicates on particular Things conceived by a human being's mind for abstraction and classification purposes.",
        notes: &[
            "A Thing Category does not exist, is or can be in a given particular world as a Thing does. Conversely, it may only be formed or developed mentally by human beings.",
            "A Thing Category as universal does not result in instances –at least with the valuable meaning of individual– but rather can be represented by more specific sub-categories of universal Things.",
        ],
    },
    TermSpec {
        id: TermId::Assertion,
        parent: None,
        display_name: "Assertion",
        synonyms: &["Human Expression"],
        definition: "Class or type that represents a positive and explicit statement or expression that somebody makes about something concerning Things, or their categories, based on thoughts, perceptions, facts, intuitions, intentions and/or beliefs, conceived with an attempt to provide current or subsequent evidence.",
        notes: &[
            "The part of the previous definition that indicates “...about something concerning Things...” means, for example, about the substance, structure, behavior, relations, situations, quantity, quality, among other aspects of Things.",
            "The part of the previous definition that indicates “...statement or expression that somebody makes...” means that a concrete human being –as a particular Thing– defines or conceives Assertions.",
            "In order to be valuable, actionable and ultimately useful for any science, an Assertion should to a great extent be verified and validated by theoretical and/or empirical evidence.",
            "An Assertion and its instances can be represented and modeled by means of informal, semiformal or formal expressions and specification languages.",
            "ISO 21838-1 defines the term “expression” as “word or group of words or corresponding symbols that can be used in making an assertion”.",
        ],
    },
    aspect(
        TermId::AssertionOnParticulars,
        "Assertion on Particulars",
        "It is an Assertion that somebody makes about something of one or more particular Things.",
        &[],
    ),
    aspect(
        TermId::AssertionOnUniversals,
        "Assertion on Universals",
        "It is an Assertion that somebody makes about something of one or more Thing Categories.",
        &[],
    ),
    aspect(
        TermId::ActionAssertion,
        "Action-related Assertion",
        "It is an Assertion related to the interaction and happening of Things since acting Powers cause any events that might occur.",
        &[
            "Particular Things can interact to each other, just as a Thing can act upon itself. See axioms A2 and A3.",
            "Interrelated Things interact to each other conforming particular situations, i.e., specific circumstances, episodes and events that are of interest for an intended agent.",
            "Interactions among Things both target entities and context entities in particular situations can be abstracted in generic situations.",
        ],
    ),
    aspect(
        TermId::AllotmentAssertion,
        "Allotment-related Assertion",
        "It is an Assertion related to the assignment of something, which implies the assignment of a Thing to itself or to other Things.",
        &["For example, a particular resource (method, tool, person, etc.) is assigned to a task in a particular situation. Or, the specific amount of time a person gives him/herself to do an assignment. Or, the specific amount of time a professor gives their students to take a test."],
    ),
    aspect(
        TermId::BehaviorAssertion,
        "Behavior-related Assertion",
        "It is an Assertion related to the Power, which represents the capability and responsibility that a particular Thing has and/or exhibits.",
        &["Behavior can be specified for particulars and can also be generalized for universals."],
    ),
    aspect(
        TermId::ConstraintAssertion,
        "Constraint-related Assertion",
        "It is an Assertion related to the specification of restrictions or conditions imposed on Things, Properties, relationships, interactions or Thing Categories that must be satisfied or evaluated to true in given situations or events.",
        &["Constraint-related Assertions can be specified for both particulars and universals."],
    ),
    aspect(
        TermId::IntentionAssertion,
        "Intention-related Assertion",
        "It is an Assertion related to the aim to be achieved by somebody.",
        &[
            "The statement of an Intention-related Assertion considers the propositional content of a goal purpose in a given situation and time frame.",
            "Intention-related Assertions can be specified for both particulars and universals.",
        ],
    ),
    aspect(
        TermId::QualityAssertion,
        "Quality-related Assertion",
        "It is an Assertion related to the requirements and constraints to be specified regarding the quality (distinguishing characteristic, attribute, or statement item) for a Thing and possibly related entities, which may be evaluable.",
        &[
            "Quality (cost, etc.) requirements and constraints can be specified for a particular Thing in terms of its Properties or Powers, or in terms of both as a whole.",
            "Quality requirements and constraints can be specified for particulars and can also be abstracted or generalized for universals.",
        ],
    ),
    aspect(
        TermId::QuantityAssertion,
        "Quantity-related Assertion",
        "It is an Assertion related to the countable, measurable and evaluable aspect of a Thing and possibly related entities, which can be specified by means of symbolic or numerical expressions.",
        &[
            "Qualities of Things can be measured, evaluated and analyzed by specifying Quantity-related Assertions and strategies as resources.",
            "A quantity or a relationship between quantities can be formalized, for instance, by mathematical, statistical or logical expressions.",
            "Quantity-related Assertions can be specified for both particulars and universals.",
        ],
    ),
    aspect(
        TermId::RelationAssertion,
        "Relation-related Assertion",
        "It is an Assertion related to logical or natural associations between two or more Things and their categories.",
        &[
            "A Thing cannot exist or be in spatiotemporal isolation from other Things in a given particular world. Therefore, a Thing is related to other Things.",
            "Relationships can be specified for particular Things (between classes or between instances and classes, or between instances), and can also be represented for Thing Categories.",
        ],
    ),
    aspect(
        TermId::SituationAssertion,
        "Situation-related Assertion",
        "It is an Assertion related to the combination of circumstances, episodes, and relationships/events between target Things and context entities that surround them, or their categories, which is of interest or meaningful to be represented or modeled for an intended agent.",
        &[
            "A Situation can be represented statically or dynamically depending on the intention of the agent.",
            "Situations can be specified for particulars and can also be generalized for universals.",
        ],
    ),
    aspect(
        TermId::StructureAssertion,
        "Structure-related Assertion",
        "It is an Assertion related to the Property, which represents the intrinsic constitution, structure, or parts of a particular Thing.",
        &["Structural aspects can be specified for particulars and can also be abstracted for universals."],
    ),
    aspect(
        TermId::SubstanceAssertion,
        "Substance-related Assertion",
        "It is an Assertion related to the ontological significance and essential import of a Thing as a whole entity, or of a set of Things.",
        &["Substance aspects can be specified for particulars and can also be abstracted for universals."],
    ),
    aspect(
        TermId::TimeAssertion,
        "Time-related Assertion",
        "It is an Assertion related to the time as a Thing or its Properties or Power, which can imply specifying temporal boundaries or limits, among other aspects, for different situations and events.",
        &["Time aspects can be specified for particulars and can also be abstracted for universals."],
    ),
];

pub static PROPERTY_SPECS: [PropertySpec; 10] = [
    PropertySpec {
        owner: TermId::Thing,
        key: "name",
        display_name: "name",
        definition: "Label or name that identifies the particular Thing.",
        notes: &[],
    },
    PropertySpec {
        owner: TermId::Thing,
        key: "description",
        display_name: "description",
        definition: "An unambiguous textual statement describing a particular Thing.",
        notes: &[],
    },
    PropertySpec {
        owner: TermId::Property,
        key: "name",
        display_name: "name",
        definition: "Label or name that identifies the Property of a Thing.",
        notes: &[],
    },
    PropertySpec {
        owner: TermId::Property,
        key: "structural_description",
        display_name: "structural description",
        definition: "An unambiguous textual statement describing the Property of a Thing in terms of its constituents, structure, or parts.",
        notes: &[],
    },
    PropertySpec {
        owner: TermId::Power,
        key: "name",
        display_name: "name",
        definition: "Label or name that identifies the Power of a Thing.",
        notes: &[],
    },
    PropertySpec {
        owner: TermId::Power,
        key: "behavioral_description",
        display_name: "behavioral description",
        definition: "An unambiguous textual statement describing the Power of a Thing in terms of responsibilities, operations or actions.",
        notes: &[],
    },
    PropertySpec {
        owner: TermId::ThingCategory,
        key: "descriptive_statement",
        display_name: "descriptive statement",
        definition: "An unambiguous textual description of the category purpose as universal.",
        notes: &["The description of the category can be based on some Properties of particular Things, or some Powers of particular Things, or both."],
    },
    PropertySpec {
        owner: TermId::Assertion,
        key: "name",
        display_name: "name",
        definition: "Label or name that identifies the Assertion.",
        notes: &[],
    },
    PropertySpec {
        owner: TermId::Assertion,
        key: "positive_statement",
        display_name: "positive statement",
        definition: "An explicit declaration of the Assertion to be defined and expressed.",
        notes: &[
            "Regarding a particular Thing or category, a positive statement refers to what it is, was, or will be, and contains no indication of approval or disapproval.",
            "A positive statement should be based on current or subsequent empirical evidence.",
        ],
    },
    PropertySpec {
        owner: TermId::Assertion,
        key: "specification",
        display_name: "specification",
        definition: "The explicit and detailed representation or model of the Assertion in a given language.",
        notes: &[
            "Assertions can be modeled by means of informal, semiformal or formal expressions and specification languages.",
            "A specification can include text in natural language, mathematical and/or logical expressions, sketches, well-formed models and diagrams, multimedia resources, among other representations.",
        ],
    },
];

pub static RELATIONSHIP_SPECS: [RelationshipSpec; 12] = [
    RelationshipSpec {
        id: RelationshipId::ActsUpon,
        name: "acts upon",
        ident: "actsUpon",
        domain: TermId::Power,
        range: TermId::Property,
        multiplicity: Some(Multiplicity { min: 1, max: None }),
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[AxiomId::A2],
        definition: "A Power acts upon one or more Properties, so it can look at them or update the status of the Thing’s properties.",
        notes: &["Note that this relationship represents internal actions, i.e., on the same Thing, not on other Things. This constraint is specified by axiom A2."],
    },
    RelationshipSpec {
        id: RelationshipId::BelongsTo,
        name: "belongs to",
        ident: "belongsTo",
        domain: TermId::Thing,
        range: TermId::ThingCategory,
        multiplicity: UNBOUNDED,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "Particulars Things may belong to none or more Thing Categories.",
        notes: &["In other words, a Thing Category predicates about a set of particular Things and their instances."],
    },
    RelationshipSpec {
        id: RelationshipId::DealsWithParticulars,
        name: "deals with particulars",
        ident: "dealsWithParticulars",
        domain: TermId::AssertionOnParticulars,
        range: TermId::Thing,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "An Assertion on Particulars deals with particular Things, both classes/subtypes and instances.",
        notes: &[],
    },
    RelationshipSpec {
        id: RelationshipId::DealsWithUniversals,
        name: "deals with universals",
        ident: "dealsWithUniversals",
        domain: TermId::AssertionOnUniversals,
        range: TermId::ThingCategory,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "An Assertion on Universals deals with universal Things, which are Ccategories.",
        notes: &[],
    },
    RelationshipSpec {
        id: RelationshipId::Defines,
        name: "defines",
        ident: "defines",
        domain: TermId::Thing,
        range: TermId::Assertion,
        multiplicity: UNBOUNDED,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "A Thing defines none or many Assertions.",
        notes: &["For example, a particular Thing such as a Human Agent defines or conceives Assertions, such as Goals, Situations, among many others."],
    },
    RelationshipSpec {
        id: RelationshipId::Enables,
        name: "enables",
        ident: "enables",
        domain: TermId::Property,
        range: TermId::Power,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[AxiomId::A1],
        definition: "A Property enables the Powers of a particular Thing.",
        notes: &[
            "Because the Properties of a Thing are there, the Entity behavior can be enabled and manifested.",
            "Note that this relationship is restricted by axiom A1.",
        ],
    },
    RelationshipSpec {
        id: RelationshipId::Generalizes,
        name: "generalizes",
        ident: "generalizes",
        domain: TermId::AssertionOnUniversals,
        range: TermId::AssertionOnParticulars,
        multiplicity: UNBOUNDED,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "An Assertion on Universals abstracts none or more Assertions on Particulars.",
        notes: &[],
    },
    RelationshipSpec {
        id: RelationshipId::InteractsWithOther,
        name: "interacts with other",
        ident: "interactsWithOther",
        domain: TermId::Power,
        range: TermId::Thing,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[AxiomId::A3],
        definition: "Due to the Power of a Thing, particular Things interact with each other.",
        notes: &["Note that this relationship represents actions on other Things, not on the same Thing. This constraint is specified by axiom A3."],
    },
    RelationshipSpec {
        id: RelationshipId::IsSeenAsOther,
        name: "is seen as other",
        ident: "isSeenAsOther",
        domain: TermId::Property,
        range: TermId::Thing,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "A Property most of the time is seen as another Thing.",
        notes: &[],
    },
    RelationshipSpec {
        id: RelationshipId::RelatesWithThing,
        name: "relates with",
        ident: "relatesWithThing",
        domain: TermId::Thing,
        range: TermId::Thing,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "A Thing relates to other particular Things.",
        notes: &[],
    },
    RelationshipSpec {
        id: RelationshipId::RelatesWithCategory,
        name: "relates with",
        ident: "relatesWithCategory",
        domain: TermId::ThingCategory,
        range: TermId::ThingCategory,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "A Thing Category may be related to other universal Things.",
        notes: &[],
    },
    RelationshipSpec {
        id: RelationshipId::RelatesWithAssertion,
        name: "relates with",
        ident: "relatesWithAssertion",
        domain: TermId::Assertion,
        range: TermId::Assertion,
        multiplicity: None,
        cardinality_severity: CardinalitySeverity::Warning,
        axioms: &[],
        definition: "An Assertion may be related to other Assertions.",
        notes: &[],
    },
];
