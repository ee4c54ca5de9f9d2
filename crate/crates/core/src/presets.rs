//! Bundled inputs, as text in the crate's file formats.

use crate::artin::ArtinPresentation;
use crate::twist::FramedTwistTree;

pub const NAMES: [&str; 4] = ["3-torus", "compose-example", "prop-4-blocks", "eight-chords"];

pub const THREE_TORUS: &str = "\
# the 3-torus
n=3
r1: x1 x3 x1^-1 x3^-1 x2 x3 x1 x3^-1 x1^-1 x3^-1 x2^-1 x3
r2: x1 x3 x1^-1 x3^-1
r3: x3^-1 x2^-1 x3 x1^-1 x3^-1 x2 x3 x1
";

/// The `s` operand of the composition example.
pub const COMPOSE_S: &str = "\
n=3
r1: x1 x2 x3 x1
r2: x1 x2 x3 x2^2
r3: x1 x2 x3^2
";

/// The `r` operand of the composition example.
pub const COMPOSE_R: &str = "\
n=3
r1: x1 x2 x3 x1^2
r2: x1 x2 x3 x2 x3 x2
r3: x1 x2 x3 x2 x3^2
";

/// Four blocks of two chords: `[1,2]`, `[3,4]`, `[5,6]`, `[7,8]`, with
/// `[3,6]` nested in the full block. Every slack is zero.
pub const PROP_FOUR_BLOCKS: &str = "\
(block 1..8 e=1 (block 1..2 e=1) (block 3..6 e=1 (block 3..4 e=2) (block 5..6 e=1)) (block 7..8 e=1))
framing: 2 2 4 4 3 3 2 2
";

pub const EIGHT_CHORDS: &str = "\
(block 1..8 e=2 (block 1..5 e=1 (block 1..3 e=1) (block 4..5 e=-1)) (block 6..8 e=1))
framing: 4 4 4 2 2 3 3 3
";

/// Text of a preset. `compose-example` yields `s` then `r`, each preceded
/// by a comment line.
pub fn text(name: &str) -> Option<String> {
    Some(match name {
        "3-torus" => THREE_TORUS.to_string(),
        "compose-example" => format!("# s\n{COMPOSE_S}# r\n{COMPOSE_R}"),
        "prop-4-blocks" => PROP_FOUR_BLOCKS.to_string(),
        "eight-chords" => EIGHT_CHORDS.to_string(),
        _ => return None,
    })
}

pub fn three_torus() -> ArtinPresentation {
    ArtinPresentation::parse(THREE_TORUS).expect("bundled preset parses")
}

/// `(s, r)`.
pub fn compose_example() -> (ArtinPresentation, ArtinPresentation) {
    (
        ArtinPresentation::parse(COMPOSE_S).expect("bundled preset parses"),
        ArtinPresentation::parse(COMPOSE_R).expect("bundled preset parses"),
    )
}

pub fn prop_four_blocks() -> FramedTwistTree {
    FramedTwistTree::parse(PROP_FOUR_BLOCKS).expect("bundled preset parses")
}

pub fn eight_chords() -> FramedTwistTree {
    FramedTwistTree::parse(EIGHT_CHORDS).expect("bundled preset parses")
}
