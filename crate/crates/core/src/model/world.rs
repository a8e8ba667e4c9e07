use crate::parser::SourceSpan;

use super::TermRef;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThingIdx(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropertyIdx(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PowerIdx(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundThing {
    pub name: String,
    pub instance_of: Option<TermRef>,
    pub span: SourceSpan,
}

/// A property or power node. Each part has exactly one owner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundPart {
    pub name: String,
    pub owner: ThingIdx,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact<A, B> {
    pub from: A,
    pub to: B,
    pub span: SourceSpan,
}

/// A ground fact base: things with their owned properties and powers, plus
/// typed relationship edges between them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroundWorld {
    pub name: String,
    pub span: SourceSpan,
    pub things: Vec<GroundThing>,
    pub properties: Vec<GroundPart>,
    pub powers: Vec<GroundPart>,
    pub belongs_to: Vec<Fact<ThingIdx, TermRef>>,
    pub relates_with: Vec<Fact<ThingIdx, ThingIdx>>,
    pub defines: Vec<Fact<ThingIdx, TermRef>>,
    pub enables: Vec<Fact<PropertyIdx, PowerIdx>>,
    pub acts_upon: Vec<Fact<PowerIdx, PropertyIdx>>,
    pub interacts: Vec<Fact<PowerIdx, ThingIdx>>,
    pub is_seen_as: Vec<Fact<PropertyIdx, ThingIdx>>,
}

impl GroundWorld {
    pub fn new(name: impl Into<String>) -> Self {
        GroundWorld {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn add_thing(&mut self, name: impl Into<String>) -> ThingIdx {
        self.things.push(GroundThing {
            name: name.into(),
            instance_of: None,
            span: SourceSpan::default(),
        });
        ThingIdx(self.things.len() - 1)
    }

    pub fn add_property(&mut self, owner: ThingIdx, name: impl Into<String>) -> PropertyIdx {
        self.properties.push(GroundPart {
            name: name.into(),
            owner,
            span: SourceSpan::default(),
        });
        PropertyIdx(self.properties.len() - 1)
    }

    pub fn add_power(&mut self, owner: ThingIdx, name: impl Into<String>) -> PowerIdx {
        self.powers.push(GroundPart {
            name: name.into(),
            owner,
            span: SourceSpan::default(),
        });
        PowerIdx(self.powers.len() - 1)
    }

    pub fn enable(&mut self, p: PropertyIdx, w: PowerIdx) {
        self.enables.push(Fact {
            from: p,
            to: w,
            span: SourceSpan::default(),
        });
    }

    pub fn act_upon(&mut self, w: PowerIdx, p: PropertyIdx) {
        self.acts_upon.push(Fact {
            from: w,
            to: p,
            span: SourceSpan::default(),
        });
    }

    pub fn interact(&mut self, w: PowerIdx, t: ThingIdx) {
        self.interacts.push(Fact {
            from: w,
            to: t,
            span: SourceSpan::default(),
        });
    }

    pub fn thing(&self, t: ThingIdx) -> &GroundThing {
        &self.things[t.0]
    }

    pub fn property(&self, p: PropertyIdx) -> &GroundPart {
        &self.properties[p.0]
    }

    pub fn power(&self, w: PowerIdx) -> &GroundPart {
        &self.powers[w.0]
    }

    /// `thing.part` label of a property node.
    pub fn property_label(&self, p: PropertyIdx) -> String {
        let part = self.property(p);
        format!("{}.{}", self.thing(part.owner).name, part.name)
    }

    pub fn power_label(&self, w: PowerIdx) -> String {
        let part = self.power(w);
        format!("{}.{}", self.thing(part.owner).name, part.name)
    }

    pub fn properties_of(&self, t: ThingIdx) -> impl Iterator<Item = PropertyIdx> + '_ {
        self.properties
            .iter()
            .enumerate()
            .filter(move |(_, p)| p.owner == t)
            .map(|(i, _)| PropertyIdx(i))
    }

    pub fn powers_of(&self, t: ThingIdx) -> impl Iterator<Item = PowerIdx> + '_ {
        self.powers
            .iter()
            .enumerate()
            .filter(move |(_, p)| p.owner == t)
            .map(|(i, _)| PowerIdx(i))
    }

    pub fn edge_count(&self) -> usize {
        self.belongs_to.len()
            + self.relates_with.len()
            + self.defines.len()
            + self.enables.len()
            + self.acts_upon.len()
            + self.interacts.len()
            + self.is_seen_as.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_assigns_owners() {
        let mut w = GroundWorld::new("w");
        let t1 = w.add_thing("t1");
        let t2 = w.add_thing("t2");
        let p = w.add_property(t1, "p1");
        let pw = w.add_power(t2, "w2");
        assert_eq!(w.property_label(p), "t1.p1");
        assert_eq!(w.power_label(pw), "t2.w2");
        assert_eq!(w.properties_of(t1).collect::<Vec<_>>(), vec![p]);
        assert_eq!(w.powers_of(t1).count(), 0);
    }
}
