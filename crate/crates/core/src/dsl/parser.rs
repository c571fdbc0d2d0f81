use super::doc::{AlgebraDecl, CutDecl, IsoDecl, MapDecl, PairDecl, ScenarioDoc};
use super::expr::{parse_expr, Cursor};
use super::lexer::{tokenize, Tok};
use super::{DslError, DslErrorKind, Pos};
use crate::cutcalc::{Expected, IsoTarget};
use crate::graded::{Generator, GradedError, Homogeneity, Polynomial, Presentation};

/// Parses scenario text into a document, checking names, degrees and homogeneity.
pub fn parse_doc(text: &str) -> Result<ScenarioDoc, DslError> {
    let mut p = DocParser {
        cur: Cursor::new(tokenize(text)?),
        algebras: Vec::new(),
        maps: Vec::new(),
        cut: None,
        isos: Vec::new(),
        expected: None,
    };
    p.items()?;
    let cut = p.cut.ok_or_else(|| {
        DslError::new(
            DslErrorKind::Semantic,
            p.cur.pos(),
            "scenario has no `cut` block",
        )
    })?;
    Ok(ScenarioDoc {
        algebras: p.algebras,
        maps: p.maps,
        cut,
        isos: p.isos,
        expected: p.expected.unwrap_or_default(),
    })
}

struct DocParser {
    cur: Cursor,
    algebras: Vec<AlgebraDecl>,
    maps: Vec<MapDecl>,
    cut: Option<CutDecl>,
    isos: Vec<IsoDecl>,
    expected: Option<Expected>,
}

fn err(kind: DslErrorKind, pos: Pos, message: impl Into<String>) -> DslError {
    DslError::new(kind, pos, message)
}

fn duplicate(name: &str, pos: Pos, what: &str) -> DslError {
    err(
        DslErrorKind::Duplicate(name.to_string()),
        pos,
        format!("{what} `{name}` is defined twice"),
    )
}

fn unknown(name: &str, pos: Pos, what: &str) -> DslError {
    err(
        DslErrorKind::UnknownIdentifier(name.to_string()),
        pos,
        format!("unknown {what} `{name}`"),
    )
}

/// Degree of a homogeneous polynomial, `None` for zero.
fn degree_of(
    p: &Polynomial,
    gens: &[Generator],
    pos: Pos,
    what: &str,
) -> Result<Option<usize>, DslError> {
    match p.homogeneity(gens) {
        Homogeneity::Zero => Ok(None),
        Homogeneity::Homogeneous(d) => Ok(Some(d)),
        Homogeneity::Inhomogeneous => Err(err(
            DslErrorKind::DegreeMismatch,
            pos,
            format!("{what} `{}` is not homogeneous", p.display(gens)),
        )),
    }
}

impl DocParser {
    fn items(&mut self) -> Result<(), DslError> {
        loop {
            let pos = self.cur.pos();
            match self.cur.peek_tok().clone() {
                Tok::Eof => return Ok(()),
                Tok::Ident(word) => {
                    self.cur.bump();
                    match word.as_str() {
                        "algebra" => self.algebra(pos)?,
                        "map" => self.map(pos)?,
                        "cut" => self.cut(pos)?,
                        "iso" => self.iso(pos)?,
                        "expect" => self.expect(pos)?,
                        _ => {
                            return Err(err(
                                DslErrorKind::Syntax,
                                pos,
                                format!(
                                    "expected `algebra`, `map`, `cut`, `iso` or `expect`, found `{word}`"
                                ),
                            ))
                        }
                    }
                }
                _ => return Err(self.cur.unexpected("a declaration")),
            }
        }
    }

    fn find_algebra(&self, name: &str, pos: Pos) -> Result<&AlgebraDecl, DslError> {
        self.algebras
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| unknown(name, pos, "algebra"))
    }

    fn algebra(&mut self, pos: Pos) -> Result<(), DslError> {
        let (name, npos) = self.cur.ident("an algebra name")?;
        if self.algebras.iter().any(|a| a.name == name) {
            return Err(duplicate(&name, npos, "algebra"));
        }
        self.cur.expect(&Tok::LBrace, "`{`")?;
        let mut gens: Vec<Generator> = Vec::new();
        let mut rels = Vec::new();
        let mut top = None;
        while !self.cur.eat(&Tok::RBrace) {
            let spos = self.cur.pos();
            if self.cur.is_keyword("gen") {
                if !rels.is_empty() {
                    return Err(err(
                        DslErrorKind::Syntax,
                        spos,
                        "generators must be declared before relations".to_string(),
                    ));
                }
                self.cur.bump();
                loop {
                    let (g, gpos) = self.cur.ident("a generator name")?;
                    if gens.iter().any(|x| x.name == g) {
                        return Err(duplicate(&g, gpos, "generator"));
                    }
                    self.cur.expect(&Tok::Colon, "`:`")?;
                    let (d, dpos) = self.cur.small_integer("a degree")?;
                    if d == 0 {
                        return Err(err(
                            DslErrorKind::Semantic,
                            dpos,
                            format!("generator `{g}` must have positive degree"),
                        ));
                    }
                    gens.push(Generator::new(g, d));
                    if !self.cur.eat(&Tok::Comma) {
                        break;
                    }
                }
            } else if self.cur.is_keyword("rel") {
                self.cur.bump();
                let rpos = self.cur.pos();
                let r = parse_expr(&mut self.cur, &gens)?;
                if r.homogeneity(&gens) == Homogeneity::Inhomogeneous {
                    return Err(err(
                        DslErrorKind::InhomogeneousRelation,
                        rpos,
                        format!("relation `{}` is not homogeneous", r.display(&gens)),
                    ));
                }
                rels.push(r);
            } else if self.cur.is_keyword("top") {
                self.cur.bump();
                if top.is_some() {
                    return Err(duplicate("top", spos, "setting"));
                }
                top = Some(self.cur.small_integer("a top degree")?.0);
            } else {
                return Err(self.cur.unexpected("`gen`, `rel`, `top` or `}`"));
            }
            self.cur.expect(&Tok::Semi, "`;`")?;
        }
        let top = top.ok_or_else(|| {
            err(
                DslErrorKind::Semantic,
                pos,
                format!("algebra `{name}` has no `top` degree"),
            )
        })?;
        let presentation = Presentation::new(gens, rels, top).map_err(|e| match e {
            GradedError::InhomogeneousRelation { relation } => err(
                DslErrorKind::InhomogeneousRelation,
                pos,
                format!("relation `{relation}` is not homogeneous"),
            ),
            other => err(DslErrorKind::Semantic, pos, other.to_string()),
        })?;
        self.algebras.push(AlgebraDecl {
            name,
            presentation,
            pos,
        });
        Ok(())
    }

    fn map(&mut self, pos: Pos) -> Result<(), DslError> {
        let (name, npos) = self.cur.ident("a map name")?;
        if self.maps.iter().any(|m| m.name == name) {
            return Err(duplicate(&name, npos, "map"));
        }
        self.cur.expect(&Tok::Colon, "`:`")?;
        let (source, spos) = self.cur.ident("a source algebra")?;
        self.cur.expect(&Tok::Arrow, "`->`")?;
        let (target, tpos) = self.cur.ident("a target algebra")?;
        let src_gens = self
            .find_algebra(&source, spos)?
            .presentation
            .generators()
            .to_vec();
        let tgt_gens = self
            .find_algebra(&target, tpos)?
            .presentation
            .generators()
            .to_vec();
        let images = self.images(&src_gens, &tgt_gens, pos, &format!("map `{name}`"))?;
        self.maps.push(MapDecl {
            name,
            source,
            target,
            images,
            pos,
        });
        Ok(())
    }

    /// `{ g -> poly; ... }` with one image per generator of `src`, returned in `src` order.
    fn images(
        &mut self,
        src: &[Generator],
        tgt: &[Generator],
        pos: Pos,
        what: &str,
    ) -> Result<Vec<(String, Polynomial)>, DslError> {
        self.cur.expect(&Tok::LBrace, "`{`")?;
        let mut found: Vec<Option<Polynomial>> = vec![None; src.len()];
        while !self.cur.eat(&Tok::RBrace) {
            let (g, gpos) = self.cur.ident("a generator name")?;
            let k = src
                .iter()
                .position(|x| x.name == g)
                .ok_or_else(|| unknown(&g, gpos, "generator"))?;
            if found[k].is_some() {
                return Err(duplicate(&g, gpos, "image of"));
            }
            self.cur.expect(&Tok::Arrow, "`->`")?;
            let ipos = self.cur.pos();
            let img = parse_expr(&mut self.cur, tgt)?;
            if let Some(d) = degree_of(&img, tgt, ipos, "image")? {
                if d != src[k].degree {
                    return Err(err(
                        DslErrorKind::DegreeMismatch,
                        ipos,
                        format!(
                            "image of `{g}` has degree {d}, but `{g}` has degree {}",
                            src[k].degree
                        ),
                    ));
                }
            }
            found[k] = Some(img);
            self.cur.expect(&Tok::Semi, "`;`")?;
        }
        src.iter()
            .zip(found)
            .map(|(g, img)| {
                img.map(|p| (g.name.clone(), p)).ok_or_else(|| {
                    err(
                        DslErrorKind::Semantic,
                        pos,
                        format!("{what} gives no image for generator `{}`", g.name),
                    )
                })
            })
            .collect()
    }

    fn cut(&mut self, pos: Pos) -> Result<(), DslError> {
        if self.cut.is_some() {
            return Err(duplicate("cut", pos, "block"));
        }
        self.cur.expect(&Tok::LBrace, "`{`")?;
        let mut names: [Option<String>; 5] = Default::default();
        const KEYS: [&str; 5] = ["minus", "total", "common", "p", "i"];
        let mut n = None;
        let mut delta = None;
        let mut pd = None;
        let mut named: Vec<(String, PairDecl)> = Vec::new();
        while !self.cur.eat(&Tok::RBrace) {
            let (key, kpos) = self.cur.ident("a cut field")?;
            if let Some(slot) = KEYS.iter().position(|k| *k == key) {
                self.cur.expect(&Tok::Eq, "`=`")?;
                let (value, vpos) = self.cur.ident("a name")?;
                if slot < 3 {
                    self.find_algebra(&value, vpos)?;
                } else if !self.maps.iter().any(|m| m.name == value) {
                    return Err(unknown(&value, vpos, "map"));
                }
                if names[slot].replace(value).is_some() {
                    return Err(duplicate(&key, kpos, "field"));
                }
            } else if key == "n" {
                self.cur.expect(&Tok::Eq, "`=`")?;
                if n.replace(self.cur.small_integer("the dimension n")?.0)
                    .is_some()
                {
                    return Err(duplicate(&key, kpos, "field"));
                }
            } else if key == "delta" {
                self.cur.expect(&Tok::Eq, "`=`")?;
                let gens = self.pair_gens(&names, kpos)?;
                self.cur.expect(&Tok::LBracket, "`[`")?;
                let mut pairs = Vec::new();
                if !self.cur.eat(&Tok::RBracket) {
                    loop {
                        pairs.push(self.pair(&gens)?);
                        if self.cur.eat(&Tok::RBracket) {
                            break;
                        }
                        self.cur.expect(&Tok::Comma, "`,` or `]`")?;
                    }
                }
                if delta.replace(pairs).is_some() {
                    return Err(duplicate(&key, kpos, "field"));
                }
            } else if key == "pd" {
                self.cur.expect(&Tok::Eq, "`=`")?;
                let (gm, _) = self.pair_gens(&names, kpos)?;
                let epos = self.cur.pos();
                let e = parse_expr(&mut self.cur, &gm)?;
                if let Some(d) = degree_of(&e, &gm, epos, "Poincaré dual class")? {
                    if d != 2 {
                        return Err(err(
                            DslErrorKind::DegreeMismatch,
                            epos,
                            format!("Poincaré dual class must have degree 2, found {d}"),
                        ));
                    }
                }
                if pd.replace(e).is_some() {
                    return Err(duplicate(&key, kpos, "field"));
                }
            } else if key == "name" {
                let (label, lpos) = self.cur.ident("an element name")?;
                if named.iter().any(|(l, _)| *l == label) {
                    return Err(duplicate(&label, lpos, "named element"));
                }
                self.cur.expect(&Tok::Eq, "`=`")?;
                let gens = self.pair_gens(&names, kpos)?;
                named.push((label, self.pair(&gens)?));
            } else {
                return Err(err(
                    DslErrorKind::Syntax,
                    kpos,
                    format!("unknown cut field `{key}`"),
                ));
            }
            self.cur.expect(&Tok::Semi, "`;`")?;
        }
        let missing = |what: &str| {
            err(
                DslErrorKind::Semantic,
                pos,
                format!("cut block is missing `{what}`"),
            )
        };
        let [minus, total, common, p, i] = names;
        self.cut = Some(CutDecl {
            minus: minus.ok_or_else(|| missing("minus"))?,
            total: total.ok_or_else(|| missing("total"))?,
            common: common.ok_or_else(|| missing("common"))?,
            p: p.ok_or_else(|| missing("p"))?,
            i: i.ok_or_else(|| missing("i"))?,
            n: n.ok_or_else(|| missing("n"))?,
            delta: delta.unwrap_or_default(),
            pd,
            named,
            pos,
        });
        Ok(())
    }

    fn pair_gens(
        &self,
        names: &[Option<String>; 5],
        pos: Pos,
    ) -> Result<(Vec<Generator>, Vec<Generator>), DslError> {
        let get = |k: usize, key: &str| -> Result<Vec<Generator>, DslError> {
            let name = names[k].as_ref().ok_or_else(|| {
                err(
                    DslErrorKind::Semantic,
                    pos,
                    format!("`{key}` must be set before elements are written"),
                )
            })?;
            Ok(self
                .find_algebra(name, pos)?
                .presentation
                .generators()
                .to_vec())
        };
        Ok((get(0, "minus")?, get(1, "total")?))
    }

    fn pair(&mut self, gens: &(Vec<Generator>, Vec<Generator>)) -> Result<PairDecl, DslError> {
        let pos = self.cur.expect(&Tok::LBrace, "`{`")?;
        let mut cminus = None;
        let mut m = None;
        loop {
            let (label, lpos) = self.cur.ident("`cminus` or `m`")?;
            self.cur.expect(&Tok::Colon, "`:`")?;
            let epos = self.cur.pos();
            let (slot, g) = match label.as_str() {
                "cminus" => (&mut cminus, &gens.0),
                "m" => (&mut m, &gens.1),
                _ => {
                    return Err(err(
                        DslErrorKind::Syntax,
                        lpos,
                        format!("pair components are labeled `cminus` and `m`, found `{label}`"),
                    ))
                }
            };
            let e = parse_expr(&mut self.cur, g)?;
            let d = degree_of(&e, g, epos, "component")?;
            if slot.replace((e, d, epos)).is_some() {
                return Err(duplicate(&label, lpos, "component"));
            }
            if self.cur.eat(&Tok::RBrace) {
                break;
            }
            self.cur.expect(&Tok::Comma, "`,` or `}`")?;
        }
        let (Some((c, dc, _)), Some((mm, dm, mpos))) = (cminus, m) else {
            return Err(err(
                DslErrorKind::Semantic,
                pos,
                "a pair needs both a `cminus` and an `m` component",
            ));
        };
        let degree = match (dc, dm) {
            (Some(a), Some(b)) if a != b => {
                return Err(err(
                    DslErrorKind::DegreeMismatch,
                    mpos,
                    format!("pair components have degrees {a} and {b}"),
                ))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => {
                return Err(err(
                    DslErrorKind::Semantic,
                    pos,
                    "cannot infer the degree of a pair with both components zero",
                ))
            }
        };
        Ok(PairDecl {
            cminus: c,
            m: mm,
            degree,
            pos,
        })
    }

    fn iso(&mut self, pos: Pos) -> Result<(), DslError> {
        let (alg, apos) = self.cur.ident("an algebra name")?;
        let src = self
            .find_algebra(&alg, apos)?
            .presentation
            .generators()
            .to_vec();
        self.cur.expect(&Tok::Arrow, "`->`")?;
        let (t, tpos) = self.cur.ident("`c` or `cplus`")?;
        let target = match t.as_str() {
            "c" => IsoTarget::C,
            "cplus" => IsoTarget::CPlus,
            _ => {
                return Err(err(
                    DslErrorKind::Syntax,
                    tpos,
                    format!("iso target must be `c` or `cplus`, found `{t}`"),
                ))
            }
        };
        let named = self
            .cut
            .as_ref()
            .ok_or_else(|| {
                err(
                    DslErrorKind::Semantic,
                    pos,
                    "`iso` must follow the `cut` block",
                )
            })?
            .named_generators();
        let images = self.images(&src, &named, pos, &format!("iso `{alg}`"))?;
        self.isos.push(IsoDecl {
            algebra: alg,
            target,
            images,
            pos,
        });
        Ok(())
    }

    fn expect(&mut self, pos: Pos) -> Result<(), DslError> {
        if self.expected.is_some() {
            return Err(duplicate("expect", pos, "block"));
        }
        self.cur.expect(&Tok::LBrace, "`{`")?;
        let mut e = Expected::default();
        while !self.cur.eat(&Tok::RBrace) {
            let (key, kpos) = self.cur.ident("an expectation key")?;
            let slot = match key.as_str() {
                "c_dims" => &mut e.c_dims,
                "cplus_dims" => &mut e.cplus_dims,
                "delta_dims" => &mut e.delta_dims,
                "c0_dims" => &mut e.c0_dims,
                _ => {
                    return Err(err(
                        DslErrorKind::Syntax,
                        kpos,
                        format!("unknown expectation `{key}`"),
                    ))
                }
            };
            self.cur.expect(&Tok::Eq, "`=`")?;
            self.cur.expect(&Tok::LBracket, "`[`")?;
            let mut v = Vec::new();
            if !self.cur.eat(&Tok::RBracket) {
                loop {
                    v.push(self.cur.small_integer("a dimension")?.0);
                    if self.cur.eat(&Tok::RBracket) {
                        break;
                    }
                    self.cur.expect(&Tok::Comma, "`,` or `]`")?;
                }
            }
            if slot.replace(v).is_some() {
                return Err(duplicate(&key, kpos, "expectation"));
            }
            self.cur.expect(&Tok::Semi, "`;`")?;
        }
        self.expected = Some(e);
        Ok(())
    }
}
