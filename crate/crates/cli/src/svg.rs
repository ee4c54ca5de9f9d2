//! Schematic drawing of a framed twist tree: one vertical line per chord,
//! one rectangle per block, nested by depth.

use std::fmt::Write;

use artin_core::{Block, FramedTwistTree};

const CHORD: f64 = 48.0;
const MARGIN: f64 = 24.0;
const LEVEL: f64 = 22.0;
const INSET: f64 = 5.0;

pub fn render(ft: &FramedTwistTree) -> String {
    let n = ft.n();
    let depth = ft.tree.depth();
    let inner = (2 * depth + 1) as f64 * LEVEL;
    let width = 2.0 * MARGIN + n as f64 * CHORD;
    let height = 2.0 * MARGIN + inner + 2.0 * LEVEL;
    let top = MARGIN + LEVEL;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    for j in 1..=n {
        let x = chord_x(j as u32);
        let _ = writeln!(
            out,
            r#"  <line class="chord" x1="{x}" y1="{MARGIN}" x2="{x}" y2="{}" stroke="black" stroke-width="1.5"/>"#,
            top + inner
        );
        let _ = writeln!(
            out,
            r#"  <text x="{x}" y="{}" text-anchor="middle">x{j}</text>"#,
            MARGIN - 6.0
        );
        let _ = writeln!(
            out,
            r#"  <text x="{x}" y="{}" text-anchor="middle">{}</text>"#,
            top + inner + LEVEL,
            ft.framing[j - 1]
        );
    }

    for root in &ft.tree.roots {
        draw(&mut out, root, 0, top, inner);
    }
    out.push_str("</svg>\n");
    out
}

fn chord_x(j: u32) -> f64 {
    MARGIN + (j as f64 - 0.5) * CHORD
}

fn draw(out: &mut String, b: &Block, depth: usize, top: f64, inner: f64) {
    let pad = INSET * (depth + 1) as f64;
    let x = MARGIN + (b.start - 1) as f64 * CHORD + pad;
    let w = b.width() as f64 * CHORD - 2.0 * pad;
    let y = top + depth as f64 * LEVEL;
    let h = inner - 2.0 * depth as f64 * LEVEL;
    let stroke = if b.exponent < 0 { "firebrick" } else { "steelblue" };
    let _ = writeln!(
        out,
        r#"  <rect class="block" x="{x}" y="{y}" width="{w}" height="{h}" fill="none" stroke="{stroke}" stroke-width="1.5"/>"#
    );
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" fill="{stroke}">{}</text>"#,
        x + 3.0,
        y + 13.0,
        b.exponent
    );
    for c in &b.children {
        draw(out, c, depth + 1, top, inner);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_rect_per_block_one_line_per_chord() {
        let ft = artin_core::presets::eight_chords();
        let svg = render(&ft);
        assert_eq!(svg.matches(r#"class="block""#).count(), ft.tree.blocks().len());
        assert_eq!(svg.matches(r#"class="chord""#).count(), 8);
        assert!(svg.contains(">-1</text>"));
    }

    #[test]
    fn children_sit_inside_parents() {
        let ft = FramedTwistTree::parse("(block 1..3 e=2 (block 2..3 e=1))\nframing: 0 0 0\n").unwrap();
        let svg = render(&ft);
        let rects: Vec<(f64, f64)> = svg
            .lines()
            .filter(|l| l.contains(r#"class="block""#))
            .map(|l| (attr(l, "x"), attr(l, "width")))
            .collect();
        let (px, pw) = rects[0];
        let (cx, cw) = rects[1];
        assert!(px < cx && cx + cw < px + pw);
    }

    fn attr(line: &str, name: &str) -> f64 {
        let key = format!(" {name}=\"");
        let rest = &line[line.find(&key).unwrap() + key.len()..];
        rest[..rest.find('"').unwrap()].parse().unwrap()
    }
}
