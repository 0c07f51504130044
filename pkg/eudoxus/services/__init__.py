"""Arithmetic engine, expression language and calculator."""
