"""Export modules for curves, traces and figures."""

from drccbo.exporters.csv_exporter import emit_csv, export_summary, export_trace, load_summary
from drccbo.exporters.plot_exporter import emit_plot, use_log_scale
from drccbo.exporters.summary import print_summary

__all__ = ['emit_csv', 'export_summary', 'export_trace', 'load_summary', 'emit_plot', 'use_log_scale',
           'print_summary']
