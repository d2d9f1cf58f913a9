#pragma once

#include "hdts/io.hpp"

#include <vector>

namespace hdts::corpus {

// The bundled examples, by name: fig1, fig2, fig3, fig4, fig5a, fig5b,
// m0, m1, erratum. Each is a document in the text format (fig5a/fig5b
// and erratum carry two systems and the connecting map).
const std::vector<std::string>& names();
bool has(const std::string& name);
Document document(const std::string& name);
std::string text(const std::string& name);

// Typed accessors used throughout the tests.
TransitionSystem fig1();
PointedTS fig2();
PointedTS fig3();
PointedTS fig4();
PointedTS fig5_tl();
PointedTS fig5_bl();
PointedTS fig5_tr();
PointedTS fig5_br();
TSMap fig5_left();   // tl -> bl, P-injective
TSMap fig5_right();  // tr -> br, not P-injective
PointedTS m0();
PointedTS m1();
TransitionSystem erratum_small();
TransitionSystem erratum_big();
TSMap erratum_inclusion();

// The inclusion of fig2 into fig3 (identity on states, label-preserving
// on actions).
TSMap fig2_to_fig3();

} // namespace hdts::corpus
