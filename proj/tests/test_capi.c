#include <stdio.h>
#include <string.h>

#include "partperm/partperm.h"

static int failures = 0;

#define EXPECT(cond)                                        \
  do {                                                      \
    if (!(cond)) {                                          \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                           \
    }                                                       \
  } while (0)

int main(void) {
  pp_perm* p = NULL;
  EXPECT(pp_perm_parse("1 3 4 2", &p) == PP_OK);
  EXPECT(pp_perm_size(p) == 4);

  uint64_t c = 0;
  int holes[] = {2};
  EXPECT(pp_count_holes(p, 5, holes, 1, PP_METHOD_DIRECT, NULL, &c) == PP_OK && c == 13);
  EXPECT(pp_count(p, 5, 1, PP_METHOD_BRUTE, 2, NULL, &c) == PP_OK && c == 69);
  EXPECT(pp_closed_form(p, 9, 1, &c) == PP_OK && c == 11050);
  EXPECT(pp_count(p, 3, 4, PP_METHOD_DIRECT, 1, NULL, &c) == PP_ERR_INVALID);
  EXPECT(strlen(pp_last_error()) > 0);

  pp_text* t = NULL;
  EXPECT(pp_sequence(p, 1, 5, PP_METHOD_DIRECT, 1, NULL, PP_FORMAT_BFILE, -1, &t) == PP_OK);
  EXPECT(strcmp(pp_text_data(t), "0 1\n1 2\n2 6\n3 20\n4 69\n") == 0);
  pp_text_free(t);

  pp_partial* pi = NULL;
  int avoid = -1;
  EXPECT(pp_partial_parse("2 * 1", &pi) == PP_OK);
  EXPECT(pp_partial_n(pi) == 3 && pp_partial_k(pi) == 1);
  pp_perm* q = NULL;
  EXPECT(pp_perm_parse("12", &q) == PP_OK);
  EXPECT(pp_avoids(pi, q, &avoid) == PP_OK && avoid == 0);
  EXPECT(pp_partial_str(pi, &t) == PP_OK && strcmp(pp_text_data(t), "2 * 1") == 0);
  pp_text_free(t);
  pp_partial_free(pi);
  pp_perm_free(q);

  EXPECT(pp_perm_parse("1 1", &q) == PP_ERR_INVALID);
  EXPECT(pp_perm_parse(NULL, &q) == PP_ERR_INVALID);

  pp_verify_bounds b = {6, 0, 0, 1};
  int passed = 0;
  EXPECT(pp_verify("enum1", &b, &passed, &t) == PP_OK && passed == 1);
  pp_text_free(t);
  EXPECT(pp_verify("nope", &b, &passed, &t) == PP_ERR_INVALID);
  EXPECT(pp_verify_target_count() == 12);
  EXPECT(pp_verify_target_name(99) == NULL);

  EXPECT(pp_biject("dyck", "5 4 2 * 8 7 6 1 3", 0, &t) == PP_OK);
  EXPECT(strstr(pp_text_data(t), "DUUDDDDUUUUDUDUD") != NULL);
  pp_text_free(t);
  EXPECT(pp_biject("dyck", "1 2 3 * 4", 0, &t) == PP_ERR_INVALID);

  EXPECT(pp_classify(3, 0, 6, 0, 1, &t) == PP_OK);
  EXPECT(strstr(pp_text_data(t), "\"block_sizes\"") != NULL);
  pp_text_free(t);

  pp_perm_free(p);
  if (failures == 0) printf("ok\n");
  return failures ? 1 : 0;
}
