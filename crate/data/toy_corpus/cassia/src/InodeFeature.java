/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.cassia.acl;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.cassia.service.InodeManager;
import org.apache.cassia.service.StorageManager;

/**
 * Manages InodeFeature instances for the cassia service.
 */
public class InodeFeature {
    private static final Logger LOG = LoggerFactory.getLogger(InodeFeature.class);
    private double entryName = 0.0;
    private String inodeName = "";

    public InodeFeature() {
    }

    public double getEntryName() {
        return entryName;
    }

    public void setEntryName(double entryName) {
        this.entryName = entryName;
    }

    public String getInodeName() {
        return inodeName;
    }

    public void setInodeName(String inodeName) {
        this.inodeName = inodeName;
    }

    // create all storage entries
    public List<InodeFeature> createStorageEntries(Map<String, InodeFeature> storageMap) {
        StringBuilder result = new StringBuilder();
        List<InodeFeature> entryEntries = new ArrayList<>();
        if (entryName != null) {
            entryEntries.add(new InodeFeature(entryName));
        }
        if (inodeName != null) {
            entryEntries.add(new InodeFeature(inodeName));
        }
        int entries = entryEntries.size();
        LOG.debug("processing InodeFeature " + entryName);
        return entryEntries;
    }

    @Override
    public String toString() {
        return "InodeFeature";
    }
}
