//! Render a quiver as a DOT digraph, ready for graphviz.

use quivext::fixtures;
use quivext::scalar::Field;

fn main() {
    let fx = fixtures::cycle(Field::Rational);
    print!("{}", fx.alg.quiver.emit_dot());
}
