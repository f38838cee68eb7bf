#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

// One of the seven small patterns built around two vertices u, v with common
// neighbours x, y, z. Vertex i of `graph` carries labels[i]; labels follow the
// fixed order u, v, w, w', x, x', y, y', z, z'.
struct FPattern {
    int index = 0;
    std::vector<std::string> labels;
    Graph graph;
    std::vector<std::string> default_u;  // labels whose full neighbourhood is pinned

    int vertex(const std::string& label) const;
};

// index in 0..6; throws BadParameter otherwise.
const FPattern& f_pattern(int index);

// Injective map j from the pattern into g: every pattern edge maps to an edge,
// and each pinned vertex keeps its degree, so its whole neighbourhood lies in
// the image.
struct FEmbedding {
    int pattern = 0;
    std::vector<std::string> labels;
    std::vector<int> image;  // image[i] = j(labels[i])
    std::vector<std::string> pinned;

    int at(const std::string& label) const;
};

// Lexicographically least embedding of pattern `index` (compared as the image
// vector in label order), or nothing.
std::optional<FEmbedding> find_f_embedding(const Graph& g, int index,
                                           const std::optional<std::vector<std::string>>& pinned =
                                               std::nullopt);

// All embeddings in lexicographic order.
std::vector<FEmbedding> all_f_embeddings(const Graph& g, int index,
                                         const std::optional<std::vector<std::string>>& pinned =
                                             std::nullopt);

// Independent check of the embedding conditions.
bool is_valid_f_embedding(const Graph& g, const FEmbedding& e);

}  // namespace locdom
