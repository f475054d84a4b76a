//! The k-cycle-preserving insertion map on canonical cycle notation,
//! traced rule by rule on a 22-letter example (letters 1..9, A..N).
//!
//! ```bash
//! cargo run --example insertion_trace
//! ```

use kcycles::bijection::{phi_core_traced, psi_core};
use kcycles::{LetterAlphabet, Permutation};

fn main() {
    let alphabet = LetterAlphabet::Base36;
    let input =
        Permutation::parse_cycles("(D76)(E)(F32)(G91C)(K54)(LJ8)(MB)(NAH)", alphabet).unwrap();
    let x = LetterAlphabet::letter_from_char('I').unwrap();

    println!("insert I into {}", input.format_cycles(alphabet).unwrap());
    let (image, trace) = phi_core_traced(&input, x, 3).unwrap();
    println!("result:       {}\n", image.format_cycles(alphabet).unwrap());

    println!("rules applied, outermost first:");
    for step in &trace.steps {
        let before = step
            .cycle_before
            .as_ref()
            .map(|c| format!("({})", alphabet.render_cycle(c).unwrap()))
            .unwrap_or_else(|| "-".into());
        let after = step
            .cycle_after
            .as_ref()
            .map(|c| format!("({})", alphabet.render_cycle(c).unwrap()))
            .unwrap_or_else(|| "-".into());
        println!("  {:6} {before} -> {after}", step.rule.label());
    }

    assert_eq!(
        image.count_k_cycles(3),
        input.count_k_cycles(3),
        "23 letters, 3 does not divide 23, so 3-cycles are preserved"
    );

    let (back, letter) = psi_core(&image, 3).unwrap();
    println!(
        "\nremoving a letter undoes it: got back {} and {}",
        back.format_cycles(alphabet).unwrap(),
        alphabet.render(letter).unwrap()
    );
    assert_eq!(back, input);
}
