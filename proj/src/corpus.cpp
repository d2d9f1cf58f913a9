#include "hdts/corpus.hpp"

#include "hdts/builders.hpp"

namespace hdts::corpus {

// Concurrent execution of u and v: the square with both 2-transitions.
TransitionSystem fig1() {
    return make_ts({"alpha", "beta", "gamma", "delta"}, {{"u", "u"}, {"v", "v"}},
                   {{"alpha", {"u"}, "beta"},
                    {"beta", {"v"}, "delta"},
                    {"alpha", {"v"}, "gamma"},
                    {"gamma", {"u"}, "delta"},
                    {"alpha", {"u", "v"}, "delta"},
                    {"alpha", {"v", "u"}, "delta"}});
}

// Two u-branches followed by one v each. The two v-edges are distinct
// actions with the same label: alpha and beta are then not past-similar
// (the branches share no v-action to synchronize on), and the system is
// not fibrant (b1 ~ b2 but (b2,v1,alpha) is missing).
PointedTS fig2() {
    return PointedTS(make_ts({"*", "b1", "b2", "alpha", "beta"},
                             {{"u", "u"}, {"v1", "v"}, {"v2", "v"}},
                             {{"*", {"u"}, "b1"},
                              {"*", {"u"}, "b2"},
                              {"b1", {"v1"}, "alpha"},
                              {"b2", {"v2"}, "beta"}}),
                     "*");
}

// The completed variant: one shared v-action covering all four edges.
// alpha and beta are past-similar and the system is fibrant.
PointedTS fig3() {
    return PointedTS(make_ts({"*", "b1", "b2", "alpha", "beta"}, {{"u", "u"}, {"v", "v"}},
                             {{"*", {"u"}, "b1"},
                              {"*", {"u"}, "b2"},
                              {"b1", {"v"}, "alpha"},
                              {"b1", {"v"}, "beta"},
                              {"b2", {"v"}, "alpha"},
                              {"b2", {"v"}, "beta"}}),
                     "*");
}

// Non-transitive past-similarity: alpha ~ beta ~ gamma but not alpha ~ gamma.
PointedTS fig4() {
    return PointedTS(make_ts({"*", "alpha", "beta", "gamma"}, {{"u", "u"}, {"v", "v"}},
                             {{"*", {"u"}, "alpha"},
                              {"*", {"u"}, "beta"},
                              {"*", {"v"}, "beta"},
                              {"*", {"v"}, "gamma"}}),
                     "*");
}

PointedTS fig5_tl() {
    return PointedTS(make_ts({"*", "p1", "p2", "q1", "q2"},
                             {{"u", "u"}, {"v1", "v"}, {"v2", "v"}},
                             {{"*", {"u"}, "p1"},
                              {"p1", {"v1"}, "p2"},
                              {"*", {"u"}, "q1"},
                              {"q1", {"v2"}, "q2"}}),
                     "*");
}

PointedTS fig5_bl() {
    return PointedTS(make_ts({"*", "b1", "b2", "m"}, {{"u", "u"}, {"v1", "v"}, {"v2", "v"}},
                             {{"*", {"u"}, "b1"},
                              {"b1", {"v1"}, "m"},
                              {"*", {"u"}, "b2"},
                              {"b2", {"v2"}, "m"}}),
                     "*");
}

PointedTS fig5_tr() {
    return PointedTS(make_ts({"*", "p1", "p2", "p3", "q1", "q2"},
                             {{"u", "u"}, {"v1", "v"}, {"v2", "v"}, {"w", "w"}},
                             {{"*", {"u"}, "p1"},
                              {"p1", {"v1"}, "p2"},
                              {"p2", {"w"}, "p3"},
                              {"*", {"u"}, "q1"},
                              {"q1", {"v2"}, "q2"}}),
                     "*");
}

PointedTS fig5_br() {
    return PointedTS(make_ts({"*", "b1", "b2", "m", "e"},
                             {{"u", "u"}, {"v1", "v"}, {"v2", "v"}, {"w", "w"}},
                             {{"*", {"u"}, "b1"},
                              {"b1", {"v1"}, "m"},
                              {"*", {"u"}, "b2"},
                              {"b2", {"v2"}, "m"},
                              {"m", {"w"}, "e"}}),
                     "*");
}

TSMap fig5_left() {
    return TSMap::by_names(fig5_tl().ts, fig5_bl().ts,
                           {{"*", "*"}, {"p1", "b1"}, {"p2", "m"}, {"q1", "b2"}, {"q2", "m"}},
                           {{"u", "u"}, {"v1", "v1"}, {"v2", "v2"}});
}

TSMap fig5_right() {
    return TSMap::by_names(fig5_tr().ts, fig5_br().ts,
                           {{"*", "*"}, {"p1", "b1"}, {"p2", "m"}, {"p3", "e"},
                            {"q1", "b2"}, {"q2", "m"}},
                           {{"u", "u"}, {"v1", "v1"}, {"v2", "v2"}, {"w", "w"}});
}

// P(uv) wedge P(u) and P(uv): bisimilar systems distinguished by no
// strong bisimulation argument but by path extension.
PointedTS m0() {
    return PointedTS(make_ts({"*", "a1", "a2", "b1"},
                             {{"u1", "u"}, {"v1", "v"}, {"u2", "u"}},
                             {{"*", {"u1"}, "a1"},
                              {"a1", {"v1"}, "a2"},
                              {"*", {"u2"}, "b1"}}),
                     "*");
}

PointedTS m1() {
    return PointedTS(make_ts({"0", "1", "2"}, {{"u1", "u"}, {"v1", "v"}},
                             {{"0", {"u1"}, "1"}, {"1", {"v1"}, "2"}}),
                     "0");
}

TransitionSystem erratum_small() {
    return make_ts({"alpha", "beta", "gamma"}, {{"u", "u"}}, {{"alpha", {"u"}, "beta"}});
}

TransitionSystem erratum_big() {
    return make_ts({"alpha", "beta", "gamma"}, {{"u", "u"}},
                   {{"alpha", {"u"}, "beta"}, {"alpha", {"u"}, "gamma"}});
}

TSMap erratum_inclusion() {
    return TSMap::by_names(erratum_small(), erratum_big(),
                           {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}},
                           {{"u", "u"}});
}

TSMap fig2_to_fig3() {
    return TSMap::by_names(fig2().ts, fig3().ts,
                           {{"*", "*"}, {"b1", "b1"}, {"b2", "b2"},
                            {"alpha", "alpha"}, {"beta", "beta"}},
                           {{"u", "u"}, {"v1", "v"}, {"v2", "v"}});
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> all = {"fig1", "fig2", "fig3", "fig4", "fig5a",
                                                 "fig5b", "m0",   "m1",   "erratum"};
    return all;
}

bool has(const std::string& name) {
    for (const auto& n : names())
        if (n == name) return true;
    return false;
}

Document document(const std::string& name) {
    Document doc;
    if (name == "fig1") {
        doc.systems.push_back({"fig1", fig1(), std::nullopt});
    } else if (name == "fig2") {
        doc.systems.push_back({"fig2", fig2().ts, "*"});
    } else if (name == "fig3") {
        doc.systems.push_back({"fig3", fig3().ts, "*"});
    } else if (name == "fig4") {
        doc.systems.push_back({"fig4", fig4().ts, "*"});
    } else if (name == "fig5a") {
        doc.systems.push_back({"fig5_tl", fig5_tl().ts, "*"});
        doc.systems.push_back({"fig5_bl", fig5_bl().ts, "*"});
        doc.maps.push_back({"fig5_left", "fig5_tl", "fig5_bl", fig5_left()});
    } else if (name == "fig5b") {
        doc.systems.push_back({"fig5_tr", fig5_tr().ts, "*"});
        doc.systems.push_back({"fig5_br", fig5_br().ts, "*"});
        doc.maps.push_back({"fig5_right", "fig5_tr", "fig5_br", fig5_right()});
    } else if (name == "m0") {
        doc.systems.push_back({"m0", m0().ts, "*"});
    } else if (name == "m1") {
        doc.systems.push_back({"m1", m1().ts, "0"});
    } else if (name == "erratum") {
        doc.systems.push_back({"erratum_small", erratum_small(), std::nullopt});
        doc.systems.push_back({"erratum_big", erratum_big(), std::nullopt});
        doc.maps.push_back({"erratum_inc", "erratum_small", "erratum_big", erratum_inclusion()});
    } else {
        throw std::invalid_argument("unknown example '" + name + "'");
    }
    return doc;
}

std::string text(const std::string& name) {
    return render(document(name));
}

} // namespace hdts::corpus
