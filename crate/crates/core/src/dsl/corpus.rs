//! The bundled scenarios. The files live in the test corpus and are compiled in, so the
//! examples written by the command-line tool and the golden tests read the same bytes.

pub const FLAG_U3: &str = include_str!("../../tests/corpus/flag_u3.cut");
pub const BLOWUP_CP2: &str = include_str!("../../tests/corpus/blowup_cp2.cut");

/// `(file name, contents)` for every bundled scenario.
pub fn bundled_examples() -> [(&'static str, &'static str); 2] {
    [("flag_u3.cut", FLAG_U3), ("blowup_cp2.cut", BLOWUP_CP2)]
}
