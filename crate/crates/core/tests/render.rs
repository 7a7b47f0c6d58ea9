use std::num::NonZeroU32;
use std::path::PathBuf;

use touchard_core::render::{render_ascii, render_svg, to_drawing, PathDrawing};
use touchard_core::{enumerate_g, enumerate_g_restricted, DyckWord, GWord, Word};

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// `(class, x1, y1, x2, y2)` for every step polyline.
fn segments(svg: &str) -> Vec<(String, i64, i64, i64, i64)> {
    svg.lines()
        .filter(|l| l.contains("<polyline"))
        .map(|l| {
            let attr = |key: &str| {
                let start = l.find(&format!("{key}=\"")).unwrap() + key.len() + 2;
                let end = start + l[start..].find('"').unwrap();
                l[start..end].to_string()
            };
            let class = attr("class").trim_start_matches("step ").to_string();
            let nums: Vec<i64> = attr("points")
                .split([' ', ','])
                .map(|t| t.parse().unwrap())
                .collect();
            (class, nums[0], nums[1], nums[2], nums[3])
        })
        .collect()
}

fn axis_y(svg: &str) -> i64 {
    let line = svg.lines().find(|l| l.contains("class=\"axis\"")).unwrap();
    let start = line.find("y1=\"").unwrap() + 4;
    line[start..start + line[start..].find('"').unwrap()]
        .parse()
        .unwrap()
}

const UNIT: NonZeroU32 = match NonZeroU32::new(20) {
    Some(u) => u,
    None => unreachable!(),
};

#[test]
fn ascii_golden() {
    let words = ["", "G", "UD", "URD", "UUDRGDURGD", "UGUDRDRG"];
    let rendered: String = words
        .iter()
        .map(|w| {
            let g: GWord = w.parse().unwrap();
            format!("[{w}]\n{}", render_ascii(&to_drawing(&g)))
        })
        .collect();
    assert_eq!(rendered, golden("ascii.txt"));
}

#[test]
fn svg_golden() {
    let g: GWord = "URDG".parse().unwrap();
    assert_eq!(render_svg(&to_drawing(&g), UNIT), golden("urdg.svg"));
    let d: DyckWord = "UUDUDD".parse().unwrap();
    assert_eq!(render_svg(&to_drawing(&d), UNIT), golden("uududd.svg"));
}

#[test]
fn grid_dimensions() {
    for n in 0..=6 {
        for u in enumerate_g(n) {
            let text = render_ascii(&to_drawing(&u));
            let lines: Vec<&str> = text.lines().collect();
            assert_eq!(lines.len() as i64, u.max_height() + 1);
            assert!(lines.iter().all(|l| l.chars().count() == u.len()));
        }
    }
}

#[test]
fn svg_is_deterministic_and_one_segment_per_step() {
    for u in enumerate_g(5) {
        let d: PathDrawing = to_drawing(&u);
        let a = render_svg(&d, UNIT);
        assert_eq!(a, render_svg(&d, UNIT));
        assert_eq!(segments(&a).len(), u.len());
    }
    let empty = render_svg(&to_drawing(&GWord::try_from(vec![]).unwrap()), UNIT);
    assert!(segments(&empty).is_empty());
    assert!(empty.contains("class=\"axis\""));
}

#[test]
fn g2_flats_on_the_ground() {
    let mut ground_flats = 0;
    let mut words_with_ground_flats = 0;
    for u in enumerate_g(2) {
        let svg = render_svg(&to_drawing(&u), UNIT);
        let axis = axis_y(&svg);
        let n = segments(&svg)
            .iter()
            .filter(|(c, _, y1, _, y2)| (c == "green" || c == "red") && *y1 == axis && *y2 == axis)
            .count();
        ground_flats += n;
        words_with_ground_flats += usize::from(n > 0);
    }
    assert_eq!(ground_flats, 8);
    assert_eq!(words_with_ground_flats, 4);

    for v in enumerate_g_restricted(2) {
        let svg = render_svg(&to_drawing(&v), UNIT);
        assert!(segments(&svg).iter().all(|s| s.0 != "red"));
    }
}

#[test]
fn red_steps_stay_off_the_axis() {
    for len in 1..=8 {
        for v in enumerate_g_restricted(len) {
            let svg = render_svg(&to_drawing(&v), UNIT);
            let axis = axis_y(&svg);
            assert!(
                segments(&svg).iter().all(|s| s.0 != "red" || s.2 != axis),
                "{v}"
            );
        }
    }
}
