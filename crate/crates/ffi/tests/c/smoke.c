#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "notascope.h"

#define CHECK(call)                                                        \
  do {                                                                     \
    NsStatus status_ = (call);                                             \
    if (status_ != NS_STATUS_OK) {                                         \
      const char *msg_ = ns_last_error_message();                          \
      fprintf(stderr, "%s failed: %d %s\n", #call, (int)status_,           \
              msg_ ? msg_ : "");                                           \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(int argc, char **argv) {
  if (argc != 2) {
    fprintf(stderr, "usage: smoke <gallery-root>\n");
    return 2;
  }
  NsGallery *g = NULL;
  CHECK(ns_gallery_load(argv[1], NULL, &g));

  size_t notations = 0, examples = 0;
  CHECK(ns_gallery_notation_count(g, &notations));
  CHECK(ns_gallery_example_count(g, &examples));
  printf("version %s\n", ns_version());
  printf("%zu notations x %zu examples\n", notations, examples);

  char id[64];
  size_t required = 0;
  CHECK(ns_gallery_notation_id(g, 0, id, sizeof id, &required));

  size_t n = 0;
  if (ns_distance_matrix(g, id, NS_METRIC_CD, NULL, 0, &n) != NS_STATUS_BUFFER_TOO_SMALL) {
    fprintf(stderr, "expected NS_STATUS_BUFFER_TOO_SMALL\n");
    return 1;
  }
  double *values = malloc(n * n * sizeof *values);
  CHECK(ns_distance_matrix(g, id, NS_METRIC_CD, values, n * n, &n));
  for (size_t i = 0; i < n; i++) {
    if (values[i * n + i] != 0.0) {
      fprintf(stderr, "nonzero diagonal\n");
      return 1;
    }
  }
  free(values);

  double sprawl = 0.0;
  CHECK(ns_sprawl(g, id, NS_METRIC_TOKEN_LD, &sprawl));
  printf("%s sprawl_token_ld %g\n", id, sprawl);

  double cd = 0.0;
  const char *a = "geom_point", *b = "geom_line";
  CHECK(ns_compression_distance((const uint8_t *)a, strlen(a), (const uint8_t *)b, strlen(b), NULL, &cd));
  printf("cd %g\n", cd);

  ns_gallery_free(g);
  return 0;
}
