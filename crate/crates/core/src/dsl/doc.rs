use std::fmt;

use super::Pos;
use crate::cutcalc::{Expected, IsoTarget};
use crate::graded::{Generator, Polynomial, Presentation};

#[derive(Clone, Debug)]
pub struct AlgebraDecl {
    pub name: String,
    pub presentation: Presentation,
    pub pos: Pos,
}

#[derive(Clone, Debug)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Images of the source generators, in source declaration order, over the target's.
    pub images: Vec<(String, Polynomial)>,
    pub pos: Pos,
}

/// A labeled pair with components over the `minus` and `total` generators.
#[derive(Clone, Debug)]
pub struct PairDecl {
    pub cminus: Polynomial,
    pub m: Polynomial,
    pub degree: usize,
    pub pos: Pos,
}

#[derive(Clone, Debug)]
pub struct CutDecl {
    pub minus: String,
    pub total: String,
    pub common: String,
    pub p: String,
    pub i: String,
    pub n: usize,
    pub delta: Vec<PairDecl>,
    pub pd: Option<Polynomial>,
    pub named: Vec<(String, PairDecl)>,
    pub pos: Pos,
}

impl CutDecl {
    pub fn named_generators(&self) -> Vec<Generator> {
        self.named
            .iter()
            .map(|(name, p)| Generator::new(name.clone(), p.degree))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct IsoDecl {
    pub algebra: String,
    pub target: IsoTarget,
    /// Images over the cut's named generators, in the presentation's generator order.
    pub images: Vec<(String, Polynomial)>,
    pub pos: Pos,
}

/// Parsed scenario file. Printing it yields canonical source that parses back to the
/// same document.
#[derive(Clone, Debug)]
pub struct ScenarioDoc {
    pub algebras: Vec<AlgebraDecl>,
    pub maps: Vec<MapDecl>,
    pub cut: CutDecl,
    pub isos: Vec<IsoDecl>,
    pub expected: Expected,
}

impl ScenarioDoc {
    pub fn algebra(&self, name: &str) -> Option<&AlgebraDecl> {
        self.algebras.iter().find(|a| a.name == name)
    }

    pub fn map(&self, name: &str) -> Option<&MapDecl> {
        self.maps.iter().find(|m| m.name == name)
    }

    fn gens_of(&self, algebra: &str) -> &[Generator] {
        self.algebra(algebra)
            .map(|a| a.presentation.generators())
            .unwrap_or(&[])
    }
}

fn dims(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

impl fmt::Display for ScenarioDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.algebras {
            let p = &a.presentation;
            writeln!(f, "algebra {} {{", a.name)?;
            if !p.generators().is_empty() {
                let gens: Vec<String> = p
                    .generators()
                    .iter()
                    .map(|g| format!("{}:{}", g.name, g.degree))
                    .collect();
                writeln!(f, "  gen {};", gens.join(", "))?;
            }
            for r in p.relations() {
                writeln!(f, "  rel {};", p.display_relation(r))?;
            }
            writeln!(f, "  top {};", p.top_degree())?;
            writeln!(f, "}}\n")?;
        }
        for m in &self.maps {
            let gens = self.gens_of(&m.target);
            writeln!(f, "map {}: {} -> {} {{", m.name, m.source, m.target)?;
            for (g, img) in &m.images {
                writeln!(f, "  {g} -> {};", img.display(gens))?;
            }
            writeln!(f, "}}\n")?;
        }

        let c = &self.cut;
        let (gm, gt) = (self.gens_of(&c.minus), self.gens_of(&c.total));
        let pair = |p: &PairDecl| {
            format!(
                "{{cminus: {}, m: {}}}",
                p.cminus.display(gm),
                p.m.display(gt)
            )
        };
        writeln!(f, "cut {{")?;
        writeln!(f, "  minus = {};", c.minus)?;
        writeln!(f, "  total = {};", c.total)?;
        writeln!(f, "  common = {};", c.common)?;
        writeln!(f, "  p = {};", c.p)?;
        writeln!(f, "  i = {};", c.i)?;
        writeln!(f, "  n = {};", c.n)?;
        if c.delta.is_empty() {
            writeln!(f, "  delta = [];")?;
        } else {
            let items: Vec<String> = c.delta.iter().map(|p| format!("    {}", pair(p))).collect();
            writeln!(f, "  delta = [\n{}\n  ];", items.join(",\n"))?;
        }
        if let Some(pd) = &c.pd {
            writeln!(f, "  pd = {};", pd.display(gm))?;
        }
        for (name, p) in &c.named {
            writeln!(f, "  name {name} = {};", pair(p))?;
        }
        writeln!(f, "}}")?;

        let named = c.named_generators();
        for iso in &self.isos {
            let target = match iso.target {
                IsoTarget::C => "c",
                IsoTarget::CPlus => "cplus",
            };
            writeln!(f, "\niso {} -> {target} {{", iso.algebra)?;
            for (g, img) in &iso.images {
                writeln!(f, "  {g} -> {};", img.display(&named))?;
            }
            writeln!(f, "}}")?;
        }

        let e = &self.expected;
        let entries: Vec<(&str, &Option<Vec<usize>>)> = vec![
            ("c_dims", &e.c_dims),
            ("cplus_dims", &e.cplus_dims),
            ("delta_dims", &e.delta_dims),
            ("c0_dims", &e.c0_dims),
        ];
        if entries.iter().any(|(_, v)| v.is_some()) {
            writeln!(f, "\nexpect {{")?;
            for (key, v) in entries {
                if let Some(v) = v {
                    writeln!(f, "  {key} = {};", dims(v))?;
                }
            }
            writeln!(f, "}}")?;
        }
        Ok(())
    }
}
