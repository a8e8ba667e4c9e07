//! Definition language and conformance validator for layered ontology
//! suites built on the ThingFO foundational ontology.
//!
//! The pipeline is [`parser`] → [`model::resolve`] → [`validator`] →
//! [`reporting`]; [`cli`] wires it to the command line.

pub mod cli;
pub mod metamodel;
pub mod model;
pub mod parser;
pub mod reporting;
pub mod validator;
