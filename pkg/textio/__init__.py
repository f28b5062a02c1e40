from textio.formats import (format_certificate, read_certificate, read_index_set,
                            read_matrix, read_vector, write_certificate,
                            write_index_set, write_matrix, write_vector)
