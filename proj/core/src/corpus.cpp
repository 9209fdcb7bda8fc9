#include "sgr/corpus.hpp"

#include "sgr/kneser.hpp"
#include "sgr/mycielskian.hpp"

namespace sgr {

namespace {

SignedGraph reduced_schrijver(int n, int k) {
    return reduce_labeled(schrijver_signed(n, k)).graph;
}

}  // namespace

std::vector<NamedGraph> chi3_corpus() {
    std::vector<NamedGraph> out;
    out.push_back({"negclique-5", make_all_negative_clique(5)});
    out.push_back({"negclique-6", make_all_negative_clique(6)});
    out.push_back({"negclique-7", make_all_negative_clique(7)});
    out.push_back({"negclique-8", make_all_negative_clique(8)});
    out.push_back({"negclique-9", make_all_negative_clique(9)});
    out.push_back({"myc13", myc13()});
    out.push_back({"reduced-schrijver-6-4", reduced_schrijver(6, 4)});
    out.push_back({"reduced-schrijver-5-2", reduced_schrijver(5, 2)});
    out.push_back({"reduced-schrijver-6-2", reduced_schrijver(6, 2)});
    out.push_back({"reduced-schrijver-5-3", reduced_schrijver(5, 3)});
    out.push_back({"digon-clique-3", reduced_schrijver(3, 1)});
    out.push_back({"digon-clique-4", reduced_schrijver(4, 1)});
    return out;
}

std::vector<NamedGraph> mixed_corpus() {
    std::vector<NamedGraph> out = chi3_corpus();
    out.push_back({"positive-triangle",
                   SignedGraph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::plus}})});
    out.push_back({"negative-triangle", make_all_negative_clique(3)});
    out.push_back({"negative-4-cycle", make_negative_cycle(4)});
    out.push_back({"negative-5-cycle", make_negative_cycle(5)});
    out.push_back({"digon", make_digon()});
    out.push_back({"negative-25-cycle", make_negative_cycle(25)});
    return out;
}

}  // namespace sgr
